#include "vtl/braid.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace vtl {

std::string BraidLetter::str() const {
  std::ostringstream os;
  os << (kind == Kind::Sigma ? 's' : 't') << index;
  if (kind == Kind::Sigma && sign < 0) os << '\'';
  return os.str();
}

BraidWord::BraidWord(int n, std::vector<BraidLetter> letters)
    : n_(n), letters_(std::move(letters)) {
  if (n < 1) throw OutOfRange("strand count must be >= 1");
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index > n - 1)
      throw IndexOutOfRange("letter " + l.str() + " needs index in 1.." +
                            std::to_string(n - 1));
    if (l.sign != 1 && l.sign != -1) throw OutOfRange("letter sign must be +-1");
    if (l.kind == BraidLetter::Kind::Tau && l.sign != 1)
      throw OutOfRange("virtual letters carry no sign");
  }
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> letters(letters_.rbegin(), letters_.rend());
  for (auto& l : letters) l = l.inverse();
  return BraidWord(n_, std::move(letters));
}

BraidWord BraidWord::concat(const BraidWord& rhs) const {
  if (n_ != rhs.n_) throw SizeMismatch("strand counts differ");
  std::vector<BraidLetter> letters = letters_;
  letters.insert(letters.end(), rhs.letters_.begin(), rhs.letters_.end());
  return BraidWord(n_, std::move(letters));
}

BraidWord BraidWord::widened(int m) const {
  if (m < n_) throw OutOfRange("cannot shrink the strand count");
  return BraidWord(m, letters_);
}

namespace {

std::vector<std::string> tokenize(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> tokens;
  std::string tok;
  while (is >> tok) tokens.push_back(tok);
  return tokens;
}

int parse_int(const std::string& tok, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw SyntaxError(std::string("expected ") + what + ", got '" + tok + "'");
  }
  if (used != tok.size())
    throw SyntaxError(std::string("trailing characters in ") + what + " '" + tok + "'");
  return value;
}

BraidWord parse_tokens(const std::vector<std::string>& tokens, int n_given) {
  int n = n_given;  // 0 = not yet known
  std::vector<BraidLetter> letters;
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    const std::string& tok = tokens[k];
    if (tok == "-n") {
      if (k + 1 >= tokens.size()) throw SyntaxError("-n needs a strand count");
      const int value = parse_int(tokens[++k], "strand count");
      if (n_given > 0 && value != n_given)
        throw SyntaxError("inline -n disagrees with the given strand count");
      n = value;
      continue;
    }
    if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 't'))
      throw SyntaxError("unrecognized token '" + tok + "'");
    std::string body = tok.substr(1);
    int sign = 1;
    if (body.back() == '\'') {
      if (tok[0] == 't')
        throw SyntaxError("virtual letters are involutions; '" + tok +
                          "' is not a letter");
      sign = -1;
      body.pop_back();
    }
    const int index = parse_int(body, "generator index");
    letters.push_back(tok[0] == 's' ? sigma(index, sign) : tau(index));
  }
  if (n == 0) throw SyntaxError("strand count missing (use -n <int>)");
  return BraidWord(n, std::move(letters));
}

}  // namespace

BraidWord parse_braid(const std::string& text) {
  return parse_tokens(tokenize(text), 0);
}

BraidWord parse_braid(const std::string& text, int n) {
  if (n < 1) throw OutOfRange("strand count must be >= 1");
  return parse_tokens(tokenize(text), n);
}

std::string format_letters(const BraidWord& w) {
  std::ostringstream os;
  for (std::size_t k = 0; k < w.letters().size(); ++k) {
    if (k) os << ' ';
    os << w.letters()[k].str();
  }
  return os.str();
}

std::string format_braid(const BraidWord& w) {
  std::string out = "-n " + std::to_string(w.strands());
  const std::string letters = format_letters(w);
  if (!letters.empty()) out += ' ' + letters;
  return out;
}

int writhe(const BraidWord& w) {
  int sum = 0;
  for (const auto& l : w.letters())
    if (l.kind == BraidLetter::Kind::Sigma) sum += l.sign;
  return sum;
}

// ---------------------------------------------------------------------------
// Relations

std::vector<BraidLetter> Relation::lhs() const {
  switch (kind) {
    case Kind::TauSquare:
      return {tau(i), tau(i)};
    case Kind::FreeInverse:
      return {sigma(i, s1), sigma(i, -s1)};
    case Kind::CommSigmaSigma:
      return {sigma(i, s1), sigma(j, s2)};
    case Kind::CommTauTau:
      return {tau(i), tau(j)};
    case Kind::CommTauSigma:
      return {tau(i), sigma(j, s1)};
    case Kind::BraidSigma:
      return {sigma(i), sigma(j), sigma(i)};
    case Kind::BraidTau:
      return {tau(i), tau(j), tau(i)};
    case Kind::Mixed:
      return {tau(i), tau(j), sigma(i)};
  }
  throw OutOfRange("unknown relation kind");
}

std::vector<BraidLetter> Relation::rhs() const {
  switch (kind) {
    case Kind::TauSquare:
    case Kind::FreeInverse:
      return {};
    case Kind::CommSigmaSigma:
      return {sigma(j, s2), sigma(i, s1)};
    case Kind::CommTauTau:
      return {tau(j), tau(i)};
    case Kind::CommTauSigma:
      return {sigma(j, s1), tau(i)};
    case Kind::BraidSigma:
      return {sigma(j), sigma(i), sigma(j)};
    case Kind::BraidTau:
      return {tau(j), tau(i), tau(j)};
    case Kind::Mixed:
      return {sigma(j), tau(i), tau(j)};
  }
  throw OutOfRange("unknown relation kind");
}

std::string Relation::str() const {
  std::ostringstream os;
  const auto side = [](const std::vector<BraidLetter>& s) {
    if (s.empty()) return std::string("1");
    std::string out;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (k) out += ' ';
      out += s[k].str();
    }
    return out;
  };
  os << side(lhs()) << " = " << side(rhs());
  return os.str();
}

namespace {

void validate_relation(const Relation& rel, int n) {
  const auto in_range = [n](int idx) { return idx >= 1 && idx <= n - 1; };
  switch (rel.kind) {
    case Relation::Kind::TauSquare:
    case Relation::Kind::FreeInverse:
      if (!in_range(rel.i)) throw IndexOutOfRange("relation index out of range");
      break;
    case Relation::Kind::CommSigmaSigma:
    case Relation::Kind::CommTauTau:
    case Relation::Kind::CommTauSigma:
      if (!in_range(rel.i) || !in_range(rel.j))
        throw IndexOutOfRange("relation index out of range");
      if (std::abs(rel.i - rel.j) < 2)
        throw NotApplicable("commutation needs |i-j| >= 2");
      break;
    case Relation::Kind::BraidSigma:
    case Relation::Kind::BraidTau:
    case Relation::Kind::Mixed:
      if (!in_range(rel.i) || !in_range(rel.j))
        throw IndexOutOfRange("relation index out of range");
      if (std::abs(rel.i - rel.j) != 1)
        throw NotApplicable("braid-type relation needs |i-j| = 1");
      break;
  }
}

bool matches_at(const std::vector<BraidLetter>& letters, std::size_t site,
                const std::vector<BraidLetter>& pattern) {
  if (site + pattern.size() > letters.size()) return false;
  return std::equal(pattern.begin(), pattern.end(), letters.begin() + site);
}

BraidWord splice(const BraidWord& w, std::size_t site, std::size_t removed,
                 const std::vector<BraidLetter>& inserted) {
  std::vector<BraidLetter> letters(w.letters().begin(),
                                   w.letters().begin() + site);
  letters.insert(letters.end(), inserted.begin(), inserted.end());
  letters.insert(letters.end(), w.letters().begin() + site + removed,
                 w.letters().end());
  return BraidWord(w.strands(), std::move(letters));
}

}  // namespace

BraidWord apply_relation(const BraidWord& w, std::size_t site,
                         const Relation& rel) {
  validate_relation(rel, w.strands());
  if (site > w.size()) throw NoMatch("site beyond end of word");
  const auto left = rel.lhs();
  const auto right = rel.rhs();
  if (matches_at(w.letters(), site, left))
    return splice(w, site, left.size(), right);
  if (matches_at(w.letters(), site, right))
    return splice(w, site, right.size(), left);
  throw NoMatch("relation " + rel.str() + " does not match at site " +
                std::to_string(site));
}

// ---------------------------------------------------------------------------
// Markov moves

namespace {

// The down-direction of a stabilization-type move also needs the prefix to
// be a word on the smaller strand count.
void require_prefix_avoids(const BraidWord& w, std::size_t suffix_len,
                           int forbidden_index) {
  if (w.size() < suffix_len) throw NotApplicable("word shorter than the suffix");
  for (std::size_t k = 0; k + suffix_len < w.size(); ++k)
    if (w.letters()[k].index >= forbidden_index)
      throw NotApplicable("prefix uses the last strand");
}

std::vector<BraidLetter> move_suffix(MarkovMove move, int n) {
  switch (move) {
    case MarkovMove::StabPos:
      return {sigma(n)};
    case MarkovMove::StabNeg:
      return {sigma(n, -1)};
    case MarkovMove::StabTau:
      return {tau(n)};
    case MarkovMove::MoveC:
      return {sigma(n, -1), tau(n - 1), sigma(n)};
    case MarkovMove::MoveD:
      return {tau(n),          tau(n - 1), sigma(n - 1), tau(n),
              sigma(n - 1, -1), tau(n - 1), tau(n)};
    case MarkovMove::Conj:
      break;
  }
  throw NotApplicable("conjugation has no suffix");
}

}  // namespace

BraidWord markov_move(const BraidWord& w, MarkovMove move, bool up,
                      const BraidWord* conjugator) {
  if (move == MarkovMove::Conj) {
    if (conjugator == nullptr) throw NotApplicable("conjugation needs a conjugator");
    if (conjugator->strands() != w.strands())
      throw SizeMismatch("conjugator strand count differs");
    return conjugator->concat(w).concat(conjugator->inverse());
  }
  const bool needs_two = move == MarkovMove::MoveC || move == MarkovMove::MoveD;
  if (up) {
    const int n = w.strands();
    if (needs_two && n < 2) throw NotApplicable("move needs at least 2 strands");
    const auto suffix = move_suffix(move, n);
    std::vector<BraidLetter> letters = w.letters();
    letters.insert(letters.end(), suffix.begin(), suffix.end());
    return BraidWord(n + 1, std::move(letters));
  }
  const int n = w.strands() - 1;  // target strand count
  if (n < 1 || (needs_two && n < 2))
    throw NotApplicable("word is too narrow for the down-move");
  const auto suffix = move_suffix(move, n);
  if (w.size() < suffix.size() ||
      !matches_at(w.letters(), w.size() - suffix.size(), suffix))
    throw NotApplicable("word does not end with the move suffix");
  require_prefix_avoids(w, suffix.size(), n);
  std::vector<BraidLetter> letters(w.letters().begin(),
                                   w.letters().end() - suffix.size());
  return BraidWord(n, std::move(letters));
}

// ---------------------------------------------------------------------------
// Representations

VTLElement rho_f(const BraidWord& w) {
  VTLElement out = VTLElement::identity(w.strands());
  for (const auto& l : w.letters()) {
    if (l.kind == BraidLetter::Kind::Sigma)
      out = out * sigma_image_f(l.index, w.strands(), l.sign < 0);
    else
      out = out * tau_image_f(l.index, w.strands());
  }
  return out;
}

ATLElement rho_a(const BraidWord& w) {
  ATLElement out = ATLElement::identity(w.strands());
  for (const auto& l : w.letters()) {
    if (l.kind == BraidLetter::Kind::Sigma)
      out = out * sigma_image_a(l.index, w.strands(), l.sign < 0);
    else
      out = out * tau_image_a(l.index, w.strands());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random equivalent words

namespace {

struct Candidate {
  std::string description;
  BraidWord result;
};

void collect_relation_moves(const BraidWord& w, std::vector<Candidate>& out) {
  const int n = w.strands();
  const auto& letters = w.letters();
  const auto push = [&](const Relation& rel, std::size_t site) {
    out.push_back({"relation " + rel.str() + " at " + std::to_string(site),
                   apply_relation(w, site, rel)});
  };
  for (std::size_t site = 0; site < letters.size(); ++site) {
    // Cancellations and swaps of two adjacent letters.
    if (site + 1 < letters.size()) {
      const BraidLetter &a = letters[site], &b = letters[site + 1];
      const bool a_sigma = a.kind == BraidLetter::Kind::Sigma;
      const bool b_sigma = b.kind == BraidLetter::Kind::Sigma;
      if (!a_sigma && !b_sigma && a.index == b.index)
        push({Relation::Kind::TauSquare, a.index}, site);
      if (a_sigma && b_sigma && a.index == b.index && a.sign == -b.sign)
        push({Relation::Kind::FreeInverse, a.index, 0, a.sign}, site);
      if (std::abs(a.index - b.index) >= 2) {
        if (a_sigma && b_sigma)
          push({Relation::Kind::CommSigmaSigma, a.index, b.index, a.sign, b.sign},
               site);
        else if (!a_sigma && !b_sigma)
          push({Relation::Kind::CommTauTau, a.index, b.index}, site);
        else if (!a_sigma && b_sigma)
          push({Relation::Kind::CommTauSigma, a.index, b.index, b.sign}, site);
        else
          push({Relation::Kind::CommTauSigma, b.index, a.index, a.sign}, site);
      }
    }
    // Length-three rewrites, matched on either side.
    if (site + 2 < letters.size()) {
      const BraidLetter &a = letters[site], &b = letters[site + 1],
                        &c = letters[site + 2];
      const bool all_sigma_pos = a.kind == BraidLetter::Kind::Sigma &&
                                 b.kind == BraidLetter::Kind::Sigma &&
                                 c.kind == BraidLetter::Kind::Sigma &&
                                 a.sign == 1 && b.sign == 1 && c.sign == 1;
      if (all_sigma_pos && a.index == c.index &&
          std::abs(a.index - b.index) == 1)
        push({Relation::Kind::BraidSigma, a.index, b.index}, site);
      const bool all_tau = a.kind == BraidLetter::Kind::Tau &&
                           b.kind == BraidLetter::Kind::Tau &&
                           c.kind == BraidLetter::Kind::Tau;
      if (all_tau && a.index == c.index && std::abs(a.index - b.index) == 1)
        push({Relation::Kind::BraidTau, a.index, b.index}, site);
      // Mixed relation, matched as tau_i tau_j sigma_i or as sigma_j tau_i tau_j.
      if (a.kind == BraidLetter::Kind::Tau && b.kind == BraidLetter::Kind::Tau &&
          c.kind == BraidLetter::Kind::Sigma && c.sign == 1 &&
          c.index == a.index && std::abs(a.index - b.index) == 1)
        push({Relation::Kind::Mixed, a.index, b.index}, site);
      if (a.kind == BraidLetter::Kind::Sigma && a.sign == 1 &&
          b.kind == BraidLetter::Kind::Tau && c.kind == BraidLetter::Kind::Tau &&
          a.index == c.index && std::abs(b.index - c.index) == 1)
        push({Relation::Kind::Mixed, b.index, c.index}, site);
    }
  }
  // Insertions of inverse pairs.
  if (n >= 2 && letters.size() < 64) {
    for (std::size_t site = 0; site <= letters.size(); ++site) {
      push({Relation::Kind::TauSquare, 1}, site);
      push({Relation::Kind::FreeInverse, 1, 0, 1}, site);
    }
  }
}

void collect_markov_moves(const BraidWord& w, int strand_cap,
                          std::vector<Candidate>& out,
                          std::vector<Candidate>& conj_out) {
  const int n = w.strands();
  if (n >= 2) {
    for (int i = 1; i <= n - 1; ++i) {
      for (const BraidLetter& g : {sigma(i), sigma(i, -1), tau(i)}) {
        const BraidWord conj(n, {g});
        conj_out.push_back({"conj by " + g.str(),
                            markov_move(w, MarkovMove::Conj, true, &conj)});
      }
    }
  }
  const auto try_move = [&](MarkovMove move, bool up, const char* name) {
    try {
      BraidWord moved = markov_move(w, move, up);
      out.push_back({std::string(name) + (up ? " up" : " down"), std::move(moved)});
    } catch (const NotApplicable&) {
    } catch (const IndexOutOfRange&) {
    }
  };
  if (n < strand_cap) {
    try_move(MarkovMove::StabPos, true, "stab_pos");
    try_move(MarkovMove::StabNeg, true, "stab_neg");
    try_move(MarkovMove::StabTau, true, "stab_tau");
    try_move(MarkovMove::MoveC, true, "move_c");
    try_move(MarkovMove::MoveD, true, "move_d");
  }
  try_move(MarkovMove::StabPos, false, "stab_pos");
  try_move(MarkovMove::StabNeg, false, "stab_neg");
  try_move(MarkovMove::StabTau, false, "stab_tau");
  try_move(MarkovMove::MoveC, false, "move_c");
  try_move(MarkovMove::MoveD, false, "move_d");
}

}  // namespace

EquivalentWord random_equivalent(const BraidWord& w, std::uint64_t seed,
                                 int steps, int strand_cap) {
  if (steps < 0) throw OutOfRange("steps must be >= 0");
  if (strand_cap <= 0) strand_cap = w.strands() + 4;
  std::mt19937_64 rng(seed);
  EquivalentWord out{w, {}};
  for (int step = 0; step < steps; ++step) {
    std::vector<Candidate> relations, markov, conj;
    collect_relation_moves(out.word, relations);
    collect_markov_moves(out.word, strand_cap, markov, conj);
    // Weighted class choice: relations half the time, then conjugations,
    // then stabilization-type moves.
    std::vector<std::vector<Candidate>*> classes;
    std::vector<double> weights;
    if (!relations.empty()) classes.push_back(&relations), weights.push_back(0.5);
    if (!conj.empty()) classes.push_back(&conj), weights.push_back(0.2);
    if (!markov.empty()) classes.push_back(&markov), weights.push_back(0.3);
    if (classes.empty()) {
      out.move_log.push_back("noop");
      continue;
    }
    std::discrete_distribution<std::size_t> pick_class(weights.begin(),
                                                       weights.end());
    auto& chosen = *classes[pick_class(rng)];
    std::uniform_int_distribution<std::size_t> pick(0, chosen.size() - 1);
    Candidate& c = chosen[pick(rng)];
    out.move_log.push_back(c.description);
    out.word = std::move(c.result);
  }
  return out;
}

}  // namespace vtl
