#include "sclkit/engine.hpp"

#include <string>

#include "sclkit/errors.hpp"

namespace sclkit {

std::string_view group_tag_name(GroupTag tag) {
  switch (tag) {
    case GroupTag::Free: return "free";
    case GroupTag::Braid: return "braid";
    case GroupTag::Aut: return "aut";
  }
  return "?";
}

GroupTag parse_group_tag(std::string_view name) {
  if (name == "free") return GroupTag::Free;
  if (name == "braid") return GroupTag::Braid;
  if (name == "aut") return GroupTag::Aut;
  throw DomainError("unknown group tag '" + std::string(name) + "' (expected free, braid, or aut)");
}

bool engine_equal(const Word& u, const Word& v, const EngineContext& ctx) {
  switch (ctx.tag) {
    case GroupTag::Free:
      return u == v;
    case GroupTag::Braid:
      return braid_equal(u, v, ctx.braid);
    case GroupTag::Aut:
      throw NoEngineError("abstract aut words need a certificate atom table to compare");
  }
  throw DomainError("bad group tag");
}

}  // namespace sclkit
