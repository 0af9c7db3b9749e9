#include "corpus.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

namespace oracle {

namespace {

const std::array<const char*, 8> kRcc8 = {"DC",   "EC",   "PO",    "TPP",
                                          "NTPP", "TPPi", "NTPPi", "EQ"};

int irand(std::mt19937& rng, int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); }

const std::string& pick(std::mt19937& rng, const std::vector<std::string>& v) {
  return v[static_cast<size_t>(irand(rng, static_cast<int>(v.size())))];
}

struct Vocab {
  std::vector<std::string> literals;   // names usable as leaves
  std::vector<std::string> quantified; // roles and features
  std::vector<std::string> features;
  std::vector<std::string> cfeatures;
  bool preds = false;
};

std::string chain_text(std::mt19937& rng, const Vocab& v) {
  std::string out;
  if (!v.features.empty()) {
    int len = irand(rng, 3);
    for (int i = 0; i < len; ++i) out += pick(rng, v.features) + ".";
  }
  return out + pick(rng, v.cfeatures);
}

std::string atoms_text(std::mt19937& rng) {
  std::array<int, 8> idx{};
  std::iota(idx.begin(), idx.end(), 0);
  int count = 1 + irand(rng, 3);
  for (int i = 0; i < count; ++i) std::swap(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(i + irand(rng, 8 - i))]);
  std::sort(idx.begin(), idx.begin() + count);
  std::string out = "{";
  for (int i = 0; i < count; ++i) out += std::string(i ? "," : "") + kRcc8[static_cast<size_t>(idx[static_cast<size_t>(i)])];
  return out + "}";
}

std::string pred_text(std::mt19937& rng, const Vocab& v) {
  return "(pred (" + chain_text(rng, v) + ") (" + chain_text(rng, v) + ") " + atoms_text(rng) +
         ")";
}

std::string leaf(std::mt19937& rng, const Vocab& v) {
  int r = irand(rng, 12);
  if (r == 0) return "top";
  if (r == 1) return "bot";
  return pick(rng, v.literals);
}

std::string gen(std::mt19937& rng, const Vocab& v, int budget) {
  if (budget <= 0) return leaf(rng, v);
  int r = irand(rng, 10);
  if (r < 5) {
    int b1 = irand(rng, budget);
    std::string op = (r < 3) ? "and" : "or";
    return "(" + op + " " + gen(rng, v, b1) + " " + gen(rng, v, budget - 1 - b1) + ")";
  }
  if (r == 5) {
    // negated leaves are common in practice, deeper negations rarer
    int inner = irand(rng, 3) ? 0 : budget - 1;
    return "(not " + gen(rng, v, inner) + ")";
  }
  if (r < 8 && !v.quantified.empty()) {
    std::string op = (r == 6) ? "some" : "all";
    return "(" + op + " " + pick(rng, v.quantified) + " " + gen(rng, v, budget - 1) + ")";
  }
  if (v.preds) return pred_text(rng, v);
  return leaf(rng, v);
}

Vocab base_vocab(const CorpusOptions& opt) {
  Vocab v;
  for (int i = 0; i < opt.primitives; ++i) v.literals.push_back("A" + std::to_string(i));
  for (int i = 0; i < opt.roles; ++i) v.quantified.push_back("R" + std::to_string(i));
  for (int i = 0; i < opt.features; ++i) {
    v.quantified.push_back("f" + std::to_string(i));
    v.features.push_back("f" + std::to_string(i));
  }
  for (int i = 0; i < opt.cfeatures; ++i) v.cfeatures.push_back("g" + std::to_string(i));
  v.preds = opt.allow_preds && !v.cfeatures.empty();
  return v;
}

Vocab full_vocab(const CorpusOptions& opt) {
  Vocab v = base_vocab(opt);
  for (int i = 0; i < opt.acyclic_axioms; ++i) v.literals.push_back("D" + std::to_string(i));
  if (!v.quantified.empty())
    for (int i = 0; i < opt.cyclic_pairs; ++i) {
      v.literals.push_back("E" + std::to_string(i));
      v.literals.push_back("E" + std::to_string(i) + "d");
    }
  return v;
}

// the recursive disjunct / conjunct and the side concept, in random order
std::string two(std::mt19937& rng, const std::string& op, const std::string& a,
                const std::string& b) {
  return irand(rng, 2) ? "(" + op + " " + a + " " + b + ")" : "(" + op + " " + b + " " + a + ")";
}

}  // namespace

std::string make_tbox(std::mt19937& rng, const CorpusOptions& opt) {
  std::string out;
  for (int i = 0; i < opt.primitives; ++i) out += "primitive A" + std::to_string(i) + ";\n";
  for (int i = 0; i < opt.roles; ++i) out += "role R" + std::to_string(i) + ";\n";
  for (int i = 0; i < opt.features; ++i) out += "feature f" + std::to_string(i) + ";\n";
  for (int i = 0; i < opt.cfeatures; ++i) out += "cfeature g" + std::to_string(i) + ";\n";
  if (opt.cfeatures > 0) out += "algebra rcc8;\n";

  Vocab v = base_vocab(opt);
  for (int i = 0; i < opt.acyclic_axioms; ++i) {
    out += "D" + std::to_string(i) + " := " + gen(rng, v, 1 + irand(rng, 3)) + ";\n";
    v.literals.push_back("D" + std::to_string(i));
  }
  bool can_recurse = !v.quantified.empty();
  for (int i = 0; can_recurse && i < opt.cyclic_pairs; ++i) {
    std::string e = "E" + std::to_string(i);
    std::string ed = e + "d";
    const std::string& r = pick(rng, v.quantified);
    std::string c1 = gen(rng, v, irand(rng, 3));
    int shape = irand(rng, 4);
    if (shape == 0) {
      out += e + " := " + two(rng, "or", c1, "(some " + r + " " + e + ")") + ";\n";
      out += ed + " := " + two(rng, "and", "(not " + c1 + ")", "(all " + r + " " + ed + ")") +
             ";\n";
    } else if (shape == 1) {
      std::string c2 = gen(rng, v, irand(rng, 2));
      out += e + " := " +
             two(rng, "or", c1, two(rng, "and", c2, "(some " + r + " " + e + ")")) + ";\n";
      out += ed + " := " +
             two(rng, "and", "(not " + c1 + ")",
                 two(rng, "or", "(not " + c2 + ")", "(all " + r + " " + ed + ")")) +
             ";\n";
    } else if (shape == 2) {
      out += e + " := " + two(rng, "and", c1, "(all " + r + " " + e + ")") + ";\n";
      out += ed + " := " + two(rng, "or", "(not " + c1 + ")", "(some " + r + " " + ed + ")") +
             ";\n";
    } else {
      std::string c2 = gen(rng, v, irand(rng, 2));
      out += e + " := " +
             two(rng, "and", c1, two(rng, "or", c2, "(all " + r + " " + e + ")")) + ";\n";
      out += ed + " := " +
             two(rng, "or", "(not " + c1 + ")",
                 two(rng, "and", "(not " + c2 + ")", "(some " + r + " " + ed + ")")) +
             ";\n";
    }
    v.literals.push_back(e);
    v.literals.push_back(ed);
  }
  return out;
}

std::string make_concept(std::mt19937& rng, const CorpusOptions& opt, int budget) {
  Vocab v = full_vocab(opt);
  return gen(rng, v, budget);
}

CorpusInstance make_instance(std::mt19937& rng, const CorpusOptions& opt) {
  CorpusInstance inst;
  inst.tbox_text = make_tbox(rng, opt);
  inst.query_text = make_concept(rng, opt, 1 + irand(rng, opt.query_connectives));
  return inst;
}

}  // namespace oracle
