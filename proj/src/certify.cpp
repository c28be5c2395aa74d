#include "sclkit/certify.hpp"

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <string>

#include "sclkit/errors.hpp"

namespace sclkit {

Word seq_product(const FactorSeq& seq) {
  Word p;
  for (const Word& f : seq) p = multiply(p, f);
  return p;
}

std::string_view step_kind_name(StepKind kind) {
  switch (kind) {
    case StepKind::FreeReduction: return "free-reduction";
    case StepKind::RelatorInsertion: return "relator-insertion";
    case StepKind::ConjugationSubstitution: return "conjugation-substitution";
    case StepKind::CommutingSwap: return "commuting-swap";
    case StepKind::EngineEquality: return "engine-equality";
  }
  return "?";
}

StepKind parse_step_kind(std::string_view name) {
  if (name == "free-reduction") return StepKind::FreeReduction;
  if (name == "relator-insertion") return StepKind::RelatorInsertion;
  if (name == "conjugation-substitution") return StepKind::ConjugationSubstitution;
  if (name == "commuting-swap") return StepKind::CommutingSwap;
  if (name == "engine-equality") return StepKind::EngineEquality;
  throw DomainError("unknown step kind '" + std::string(name) + "'");
}

namespace {

Alphabet tag_alphabet(GroupTag tag) {
  switch (tag) {
    case GroupTag::Free: return Alphabet::Free;
    case GroupTag::Braid: return Alphabet::Braid;
    case GroupTag::Aut: return Alphabet::Abstract;
  }
  throw DomainError("bad group tag");
}

bool step_uses_engine(StepKind kind) {
  return kind != StepKind::FreeReduction;
}

bool family_ok(const Word& w, GroupTag tag) {
  return w.empty() || w.family() == tag_alphabet(tag);
}

/// Composes the atoms named by an abstract word, left to right. Throws
/// DomainError for letters outside the table and for atoms that cannot be
/// inverted (no witness).
FreeAutomorphism compile_atom_word(const Certificate& cert, const Word& w) {
  FreeAutomorphism acc = FreeAutomorphism::identity(cert.context);
  for (const Generator& g : w) {
    if (g.index < 1 || static_cast<std::size_t>(g.index) > cert.atoms.size())
      throw DomainError("atom e" + std::to_string(g.index) + " is not in the atom table");
    const FreeAutomorphism& atom = cert.atoms[static_cast<std::size_t>(g.index) - 1];
    acc = compose(acc, g.sign > 0 ? atom : atom.inverse());
  }
  return acc;
}

bool group_equal(const Certificate& cert, const Word& u, const Word& v, std::uint64_t budget) {
  switch (cert.group_tag) {
    case GroupTag::Free:
      return u == v;
    case GroupTag::Braid: {
      const BraidContext ctx = cert.context == kInfiniteStrands
                                   ? BraidContext::infinite(budget)
                                   : BraidContext::strands(cert.context, budget);
      return braid_equal(u, v, ctx);
    }
    case GroupTag::Aut:
      return aut_equal(compile_atom_word(cert, u), compile_atom_word(cert, v));
  }
  throw DomainError("bad group tag");
}

struct StepOutcome {
  enum Kind { Ok, Rejected, Inconclusive } kind = Ok;
  std::string reason;

  static StepOutcome ok() { return {Ok, {}}; }
  static StepOutcome rejected(std::string r) { return {Rejected, std::move(r)}; }
  static StepOutcome inconclusive(std::string r) { return {Inconclusive, std::move(r)}; }
};

StepOutcome check_step_words(const Certificate& cert, const Step& st) {
  for (const FactorSeq* seq : {&st.before, &st.after})
    for (const Word& f : *seq)
      if (!family_ok(f, cert.group_tag))
        return StepOutcome::rejected("factor outside the group's alphabet");
  for (const Word* w : {&st.relator, &st.conjugator, &st.base})
    if (!family_ok(*w, cert.group_tag))
      return StepOutcome::rejected("step data outside the group's alphabet");
  if (cert.group_tag == GroupTag::Braid && cert.context != kInfiniteStrands) {
    const BraidContext ctx = BraidContext::strands(cert.context);
    for (const FactorSeq* seq : {&st.before, &st.after})
      for (const Word& f : *seq)
        if (!is_admissible(f, ctx)) return StepOutcome::rejected("factor uses a strand outside the context");
    for (const Word* w : {&st.relator, &st.conjugator, &st.base})
      if (!is_admissible(*w, ctx))
        return StepOutcome::rejected("step data uses a strand outside the context");
  }
  return StepOutcome::ok();
}

/// Everything except chain linkage, which verify handles so the checks stay
/// independent per step.
StepOutcome check_step_body(const Certificate& cert, const Step& st) {
  if (auto words = check_step_words(cert, st); words.kind != StepOutcome::Ok) return words;
  try {
    switch (st.kind) {
      case StepKind::FreeReduction: {
        if (seq_product(st.before) != seq_product(st.after))
          return StepOutcome::rejected("products are not freely equal");
        return StepOutcome::ok();
      }
      case StepKind::RelatorInsertion: {
        if (st.position > st.before.size())
          return StepOutcome::rejected("insertion position past the end");
        if (st.after.size() != st.before.size() + 1)
          return StepOutcome::rejected("after is not before plus one factor");
        for (std::size_t i = 0; i < st.position; ++i)
          if (st.after[i] != st.before[i]) return StepOutcome::rejected("factors before the insertion differ");
        if (st.after[st.position] != st.relator)
          return StepOutcome::rejected("inserted factor does not match the stated relator");
        for (std::size_t i = st.position; i < st.before.size(); ++i)
          if (st.after[i + 1] != st.before[i]) return StepOutcome::rejected("factors after the insertion differ");
        if (!group_equal(cert, st.relator, Word{}, st.budget))
          return StepOutcome::rejected("inserted factor is not trivial in the group");
        return StepOutcome::ok();
      }
      case StepKind::ConjugationSubstitution: {
        if (st.before.size() != st.after.size())
          return StepOutcome::rejected("factor counts differ");
        if (st.position >= st.before.size())
          return StepOutcome::rejected("substitution position past the end");
        for (std::size_t i = 0; i < st.before.size(); ++i)
          if (i != st.position && st.after[i] != st.before[i])
            return StepOutcome::rejected("a factor changed away from the substitution position");
        const Word expected = conjugate(st.base, st.conjugator);
        if (st.after[st.position] != expected)
          return StepOutcome::rejected("after factor is not the stated conjugate");
        if (!group_equal(cert, st.before[st.position], expected, st.budget))
          return StepOutcome::rejected("factor is not equal to the stated conjugate in the group");
        return StepOutcome::ok();
      }
      case StepKind::CommutingSwap: {
        if (st.before.size() != st.after.size())
          return StepOutcome::rejected("factor counts differ");
        if (st.position + 1 >= st.before.size())
          return StepOutcome::rejected("swap position past the end");
        for (std::size_t i = 0; i < st.before.size(); ++i) {
          const Word& want = i == st.position       ? st.before[st.position + 1]
                             : i == st.position + 1 ? st.before[st.position]
                                                    : st.before[i];
          if (st.after[i] != want) return StepOutcome::rejected("after is not before with the pair swapped");
        }
        const Word& f = st.before[st.position];
        const Word& g = st.before[st.position + 1];
        if (!group_equal(cert, multiply(f, g), multiply(g, f), st.budget))
          return StepOutcome::rejected("the swapped factors do not commute in the group");
        return StepOutcome::ok();
      }
      case StepKind::EngineEquality: {
        if (!group_equal(cert, seq_product(st.before), seq_product(st.after), st.budget))
          return StepOutcome::rejected("products differ under the group engine");
        return StepOutcome::ok();
      }
    }
    return StepOutcome::rejected("unknown step kind");
  } catch (const BudgetExceededError&) {
    return StepOutcome::inconclusive("engine budget of " + std::to_string(st.budget) + " exhausted");
  } catch (const DomainError& e) {
    return StepOutcome::rejected(e.what());
  }
}

StepOutcome check_step(const Certificate& cert, std::size_t i) {
  const Step& st = cert.steps[i];
  if (i == 0) {
    if (st.before.size() != 1 || st.before[0] != cert.claim.first)
      return StepOutcome::rejected("first step does not start from the left claim word");
  } else if (st.before != cert.steps[i - 1].after) {
    return StepOutcome::rejected("before does not continue the previous step");
  }
  if (i + 1 == cert.steps.size()) {
    if (st.after.size() != 1 || st.after[0] != cert.claim.second)
      return StepOutcome::rejected("last step does not reach the right claim word");
  }
  return check_step_body(cert, st);
}

/// Claim-level validation shared by both verifiers. nullopt = fine.
std::optional<Verdict> check_claim_level(const Certificate& cert) {
  const auto reject = [](std::string reason) {
    return Verdict{VerdictStatus::Rejected, 0, std::move(reason)};
  };
  switch (cert.group_tag) {
    case GroupTag::Free:
      if (cert.context != 0) return reject("free-group certificates take context 0");
      break;
    case GroupTag::Braid:
      if (cert.context < 0) return reject("negative strand count");
      break;
    case GroupTag::Aut:
      if (cert.context < 1) return reject("aut certificates need a positive ambient rank");
      break;
  }
  if (cert.group_tag != GroupTag::Aut && !cert.atoms.empty())
    return reject("atom tables belong to aut certificates only");
  for (const FreeAutomorphism& atom : cert.atoms)
    if (atom.rank() != cert.context) return reject("atom rank differs from the ambient rank");
  for (const Word* w : {&cert.claim.first, &cert.claim.second}) {
    if (!family_ok(*w, cert.group_tag)) return reject("claim word outside the group's alphabet");
    if (cert.group_tag == GroupTag::Braid && cert.context != kInfiniteStrands &&
        !is_admissible(*w, BraidContext::strands(cert.context)))
      return reject("claim word uses a strand outside the context");
  }
  if (cert.steps.empty() && cert.claim.first != cert.claim.second)
    return reject("empty chain connects unequal claim words");
  return std::nullopt;
}

Verdict verdict_from(const std::vector<StepOutcome>& outcomes) {
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].kind == StepOutcome::Rejected)
      return {VerdictStatus::Rejected, i + 1, outcomes[i].reason};
    if (outcomes[i].kind == StepOutcome::Inconclusive)
      return {VerdictStatus::Inconclusive, i + 1, outcomes[i].reason};
  }
  return {VerdictStatus::Accepted, 0, {}};
}

}  // namespace

Verdict verify_serial(const Certificate& cert) {
  if (auto bad = check_claim_level(cert)) return *bad;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const StepOutcome out = check_step(cert, i);
    if (out.kind == StepOutcome::Rejected) return {VerdictStatus::Rejected, i + 1, out.reason};
    if (out.kind == StepOutcome::Inconclusive)
      return {VerdictStatus::Inconclusive, i + 1, out.reason};
  }
  return {VerdictStatus::Accepted, 0, {}};
}

Verdict verify(const Certificate& cert) {
  if (auto bad = check_claim_level(cert)) return *bad;
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(cert.steps.size());
  std::vector<StepOutcome> outcomes(cert.steps.size());
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i)
    outcomes[static_cast<std::size_t>(i)] = check_step(cert, static_cast<std::size_t>(i));
  return verdict_from(outcomes);
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

namespace {

std::uint32_t crc32(std::string_view data) {
  std::uint32_t crc = 0xFFFFFFFFu;
  for (unsigned char c : data) {
    crc ^= c;
    for (int k = 0; k < 8; ++k) crc = (crc >> 1) ^ (0xEDB88320u & (0u - (crc & 1u)));
  }
  return ~crc;
}

std::string hex32(std::uint32_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(8, '0');
  for (int i = 7; i >= 0; --i, v >>= 4) out[static_cast<std::size_t>(i)] = digits[v & 0xF];
  return out;
}

std::string render_factors(const FactorSeq& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += " | ";
    out += render_word(seq[i]);
  }
  return out;
}

constexpr std::string_view kTrailerPrefix = "checksum crc32 ";

struct LineCursor {
  std::string_view text;
  std::size_t offset = 0;
  std::size_t line_no = 0;  // 1-based number of the line most recently read

  bool done() const { return offset >= text.size(); }

  [[noreturn]] void fail(const std::string& msg, std::size_t at_line) const {
    throw ParseError("line " + std::to_string(at_line) + ": " + msg, at_line);
  }

  std::string_view next(const std::string& expect_what) {
    if (done()) fail("unexpected end of certificate (expected " + expect_what + ")", line_no + 1);
    const std::size_t nl = text.find('\n', offset);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    std::string_view line = text.substr(offset, end - offset);
    offset = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    return line;
  }

  /// Next line, which must start with "<key> " (or equal key exactly when the
  /// rest may be empty); returns the rest.
  std::string_view field(std::string_view key, bool allow_empty = false) {
    std::string_view line = next(std::string(key));
    if (line == key && allow_empty) return {};
    const std::string prefix = std::string(key) + " ";
    if (line.rfind(prefix, 0) != 0)
      fail("expected '" + std::string(key) + "', got '" + std::string(line) + "'", line_no);
    return line.substr(prefix.size());
  }
};

std::uint64_t parse_uint(std::string_view s, LineCursor& in, const std::string& what) {
  std::uint64_t value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || s.empty())
    in.fail("bad " + what + " '" + std::string(s) + "'", in.line_no);
  return value;
}

Word parse_word_line(std::string_view s, Alphabet family, LineCursor& in) {
  try {
    return parse_word(s, family);
  } catch (const ParseError& e) {
    in.fail(e.what(), in.line_no);
  }
}

FactorSeq parse_factors(std::string_view rest, Alphabet family, LineCursor& in) {
  FactorSeq seq;
  if (rest.empty()) return seq;
  std::size_t start = 0;
  while (true) {
    std::size_t bar = rest.find('|', start);
    std::string_view piece = rest.substr(start, bar == std::string_view::npos ? rest.size() - start
                                                                              : bar - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    if (piece.empty()) in.fail("empty factor", in.line_no);
    seq.push_back(parse_word_line(piece, family, in));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return seq;
}

}  // namespace

std::string serialize(const Certificate& cert) {
  std::string out;
  out += "gcert 1\n";
  out += "group " + std::string(group_tag_name(cert.group_tag)) + "\n";
  out += "context " + std::to_string(cert.context) + "\n";
  out += "claim-left " + render_word(cert.claim.first) + "\n";
  out += "claim-right " + render_word(cert.claim.second) + "\n";
  if (cert.group_tag == GroupTag::Aut) {
    out += "atoms " + std::to_string(cert.atoms.size()) + "\n";
    for (std::size_t k = 0; k < cert.atoms.size(); ++k)
      out += "atom " + std::to_string(k + 1) + " " + render_automorphism(cert.atoms[k]) + "\n";
  }
  out += "steps " + std::to_string(cert.steps.size()) + "\n";
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const Step& st = cert.steps[i];
    out += "step " + std::to_string(i + 1) + " " + std::string(step_kind_name(st.kind)) + "\n";
    if (step_uses_engine(st.kind)) out += "budget " + std::to_string(st.budget) + "\n";
    switch (st.kind) {
      case StepKind::RelatorInsertion:
        out += "position " + std::to_string(st.position) + "\n";
        out += "relator " + render_word(st.relator) + "\n";
        break;
      case StepKind::ConjugationSubstitution:
        out += "position " + std::to_string(st.position) + "\n";
        out += "conjugator " + render_word(st.conjugator) + "\n";
        out += "base " + render_word(st.base) + "\n";
        break;
      case StepKind::CommutingSwap:
        out += "position " + std::to_string(st.position) + "\n";
        break;
      case StepKind::FreeReduction:
      case StepKind::EngineEquality:
        break;
    }
    out += "before " + render_factors(st.before) + "\n";
    out += "after " + render_factors(st.after) + "\n";
  }
  out += std::string(kTrailerPrefix) + hex32(crc32(out)) + "\n";
  return out;
}

Certificate deserialize(std::string_view text) {
  // Peel off the integrity trailer, if present, and check it against the
  // bytes it covers before interpreting anything else.
  std::string_view body = text;
  {
    std::string_view t = text;
    if (!t.empty() && t.back() == '\n') t.remove_suffix(1);
    const std::size_t nl = t.rfind('\n');
    const std::size_t line_start = nl == std::string_view::npos ? 0 : nl + 1;
    std::string_view last_line = t.substr(line_start);
    if (last_line.rfind(kTrailerPrefix, 0) == 0) {
      std::string_view hex = last_line.substr(kTrailerPrefix.size());
      std::uint32_t stated = 0;
      auto [ptr, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), stated, 16);
      if (ec != std::errc{} || ptr != hex.data() + hex.size() || hex.size() != 8)
        throw ParseError("malformed integrity trailer", line_start);
      const std::string_view covered = text.substr(0, line_start);
      if (crc32(covered) != stated)
        throw ParseError("integrity trailer does not match the certificate bytes", line_start);
      body = covered;
    }
  }

  LineCursor in{body};
  if (in.next("the gcert header") != "gcert 1")
    in.fail("unsupported certificate format (expected 'gcert 1')", in.line_no);

  Certificate cert;
  try {
    cert.group_tag = parse_group_tag(in.field("group"));
  } catch (const DomainError& e) {
    in.fail(e.what(), in.line_no);
  }
  const Alphabet family = tag_alphabet(cert.group_tag);
  cert.context = static_cast<int>(parse_uint(in.field("context"), in, "context"));
  cert.claim.first = parse_word_line(in.field("claim-left"), family, in);
  cert.claim.second = parse_word_line(in.field("claim-right"), family, in);

  if (cert.group_tag == GroupTag::Aut) {
    const std::uint64_t count = parse_uint(in.field("atoms"), in, "atom count");
    for (std::uint64_t k = 1; k <= count; ++k) {
      std::string_view rest = in.field("atom");
      const std::size_t sp = rest.find(' ');
      if (sp == std::string_view::npos) in.fail("atom line needs an index and a map", in.line_no);
      if (parse_uint(rest.substr(0, sp), in, "atom index") != k)
        in.fail("atom lines must be numbered in order", in.line_no);
      try {
        cert.atoms.push_back(parse_automorphism(rest.substr(sp + 1)));
      } catch (const ParseError& e) {
        in.fail(e.what(), in.line_no);
      } catch (const DomainError& e) {
        in.fail(e.what(), in.line_no);
      }
    }
  }

  const std::uint64_t step_count = parse_uint(in.field("steps"), in, "step count");
  for (std::uint64_t i = 1; i <= step_count; ++i) {
    std::string_view head = in.field("step");
    const std::size_t sp = head.find(' ');
    if (sp == std::string_view::npos) in.fail("step line needs an index and a kind", in.line_no);
    if (parse_uint(head.substr(0, sp), in, "step index") != i)
      in.fail("steps must be numbered in order", in.line_no);
    Step st;
    try {
      st.kind = parse_step_kind(head.substr(sp + 1));
    } catch (const DomainError& e) {
      in.fail(e.what(), in.line_no);
    }
    if (step_uses_engine(st.kind))
      st.budget = parse_uint(in.field("budget"), in, "budget");
    switch (st.kind) {
      case StepKind::RelatorInsertion:
        st.position = parse_uint(in.field("position"), in, "position");
        st.relator = parse_word_line(in.field("relator"), family, in);
        break;
      case StepKind::ConjugationSubstitution:
        st.position = parse_uint(in.field("position"), in, "position");
        st.conjugator = parse_word_line(in.field("conjugator"), family, in);
        st.base = parse_word_line(in.field("base"), family, in);
        break;
      case StepKind::CommutingSwap:
        st.position = parse_uint(in.field("position"), in, "position");
        break;
      case StepKind::FreeReduction:
      case StepKind::EngineEquality:
        break;
    }
    st.before = parse_factors(in.field("before", /*allow_empty=*/true), family, in);
    st.after = parse_factors(in.field("after", /*allow_empty=*/true), family, in);
    cert.steps.push_back(std::move(st));
  }
  if (!in.done()) in.fail("unexpected line after the last step", in.line_no + 1);
  return cert;
}

Certificate factorization_certificate(const Word& w,
                                      const std::vector<std::pair<Word, Word>>& pairs) {
  Certificate cert;
  cert.group_tag = GroupTag::Free;
  cert.claim = {w, w};
  if (pairs.empty()) {
    if (!w.empty()) throw DomainError("a nonempty word needs at least one commutator pair");
    return cert;
  }
  Step expand;
  expand.kind = StepKind::FreeReduction;
  expand.before = {w};
  for (const auto& [a, b] : pairs) {
    expand.after.push_back(a);
    expand.after.push_back(b);
    expand.after.push_back(invert(a));
    expand.after.push_back(invert(b));
  }
  if (seq_product(expand.after) != w)
    throw DomainError("the commutator pairs do not multiply to the word");
  Step regroup;
  regroup.kind = StepKind::FreeReduction;
  regroup.before = expand.after;
  regroup.after = {w};
  cert.steps = {std::move(expand), std::move(regroup)};
  return cert;
}

}  // namespace sclkit
