#pragma once

#include <string_view>

#include "sclkit/braid.hpp"
#include "sclkit/word.hpp"

namespace sclkit {

/// Which group's equality engine decides word identities.
enum class GroupTag { Free, Braid, Aut };

std::string_view group_tag_name(GroupTag tag);
GroupTag parse_group_tag(std::string_view name);  // "free" | "braid" | "aut"

struct EngineContext {
  GroupTag tag = GroupTag::Free;
  BraidContext braid{};  // consulted only when tag == Braid

  static EngineContext free_group() { return {GroupTag::Free, {}}; }
  static EngineContext braid_group(BraidContext ctx) { return {GroupTag::Braid, ctx}; }
};

/// Equality in the tagged group. Free words compare by reduction (Word values
/// are already reduced), braid words by handle reduction. Abstract aut atoms
/// have no meaning without a certificate's atom table, so the Aut tag throws
/// NoEngineError here.
bool engine_equal(const Word& u, const Word& v, const EngineContext& ctx);

}  // namespace sclkit
