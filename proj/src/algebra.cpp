#include "stal/algebra.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace stal {

namespace detail {
const char* builtin_algebra_json(const std::string& name);  // algebra_data.cpp
}

using nlohmann::json;

std::shared_ptr<const QualitativeAlgebra> QualitativeAlgebra::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("algebra data is not valid JSON: ") + e.what());
  }
  auto alg = std::shared_ptr<QualitativeAlgebra>(new QualitativeAlgebra());
  try {
    alg->name_ = j.at("name").get<std::string>();
    alg->arity_ = j.value("arity", 2);
    alg->atoms_ = j.at("atoms").get<std::vector<std::string>>();
    if (alg->atoms_.empty() || alg->atoms_.size() > 30)
      throw InputError("algebra must declare between 1 and 30 atoms");
    for (size_t i = 0; i < alg->atoms_.size(); ++i) {
      if (!alg->atom_index_.emplace(alg->atoms_[i], static_cast<int>(i)).second)
        throw InputError("duplicate atom " + alg->atoms_[i]);
    }
    alg->identity_ = alg->atom_index(j.at("identity").get<std::string>());
    alg->converse_.assign(alg->atoms_.size(), -1);
    for (auto& [k, v] : j.at("converse").items())
      alg->converse_[alg->atom_index(k)] = alg->atom_index(v.get<std::string>());
    for (int c : alg->converse_)
      if (c < 0) throw InputError("converse table incomplete in algebra " + alg->name_);
    size_t n = alg->atoms_.size();
    alg->comp_.assign(n, std::vector<uint32_t>(n, 0));
    auto& comp = j.at("composition");
    for (auto& [k, v] : comp.items()) {
      auto sep = k.find(',');
      if (sep == std::string::npos) throw InputError("composition key must be \"A,B\": " + k);
      int a = alg->atom_index(k.substr(0, sep));
      int b = alg->atom_index(k.substr(sep + 1));
      uint32_t m = 0;
      for (auto& atom : v) m |= 1u << alg->atom_index(atom.get<std::string>());
      alg->comp_[a][b] = m;
    }
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b)
        if (alg->comp_[a][b] == 0)
          throw InputError("composition entry missing for " + alg->atoms_[a] + "," + alg->atoms_[b]);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed algebra data: ") + e.what());
  }
  alg->check_axioms();
  return alg;
}

void QualitativeAlgebra::check_axioms() const {
  size_t n = atoms_.size();
  for (size_t a = 0; a < n; ++a) {
    if (converse_[converse_[a]] != static_cast<int>(a))
      throw InputError("converse is not an involution at " + atoms_[a]);
  }
  if (converse_[identity_] != identity_)
    throw InputError("identity atom must be its own converse");
  for (size_t a = 0; a < n; ++a) {
    if (comp_[identity_][a] != (1u << a) || comp_[a][identity_] != (1u << a))
      throw InputError("identity law fails at " + atoms_[a]);
  }
  // Peircean coherence: c in a;b  iff  conv(c) in conv(b);conv(a).
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      for (size_t c = 0; c < n; ++c) {
        bool lhs = (comp_[a][b] >> c) & 1u;
        bool rhs = (comp_[converse_[b]][converse_[a]] >> converse_[c]) & 1u;
        if (lhs != rhs)
          throw InputError("Peircean coherence fails at " + atoms_[a] + ";" + atoms_[b] +
                           " / " + atoms_[c]);
      }
    }
  }
}

std::shared_ptr<const QualitativeAlgebra> QualitativeAlgebra::load(const std::string& name) {
  if (const char* dir = std::getenv("STAL_ALGEBRA_DIR")) {
    std::string path = std::string(dir) + "/" + name + ".json";
    std::ifstream in(path);
    if (in) {
      std::ostringstream buf;
      buf << in.rdbuf();
      auto alg = from_json_text(buf.str());
      if (alg->name() != name)
        throw InputError("algebra file " + path + " declares name " + alg->name());
      return alg;
    }
  }
  if (const char* text = detail::builtin_algebra_json(name)) return from_json_text(text);
  throw InputError("unknown algebra: " + name);
}

int QualitativeAlgebra::atom_index(const std::string& atom) const {
  auto it = atom_index_.find(atom);
  if (it == atom_index_.end()) throw InputError("unknown atom " + atom + " in algebra " + name_);
  return it->second;
}

uint32_t QualitativeAlgebra::converse_mask(uint32_t mask) const {
  uint32_t out = 0;
  for (size_t a = 0; a < atoms_.size(); ++a)
    if ((mask >> a) & 1u) out |= 1u << converse_[a];
  return out;
}

uint32_t QualitativeAlgebra::compose_mask(uint32_t a, uint32_t b) const {
  uint32_t out = 0;
  for (size_t i = 0; i < atoms_.size() && out != full_mask(); ++i) {
    if (!((a >> i) & 1u)) continue;
    for (size_t j = 0; j < atoms_.size(); ++j)
      if ((b >> j) & 1u) out |= comp_[i][j];
  }
  return out;
}

std::string Relation::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < algebra->atom_count(); ++i) {
    if ((mask >> i) & 1u) {
      if (!first) out += ",";
      out += algebra->atom_name(i);
      first = false;
    }
  }
  return out + "}";
}

Relation complement(const Relation& r) {
  return {r.algebra, r.algebra->full_mask() & ~r.mask};
}

Relation converse(const Relation& r) { return {r.algebra, r.algebra->converse_mask(r.mask)}; }

Relation compose(const Relation& a, const Relation& b) {
  if (a.algebra->name() != b.algebra->name())
    throw InputError("compose across different algebras");
  return {a.algebra, a.algebra->compose_mask(a.mask, b.mask)};
}

Relation relation_from_atoms(std::shared_ptr<const QualitativeAlgebra> alg,
                             const std::vector<std::string>& atoms) {
  uint32_t m = 0;
  for (auto& a : atoms) m |= 1u << alg->atom_index(a);
  return {std::move(alg), m};
}

int Qcsp::add_variable(const std::string& name) {
  auto it = index_.find(name);
  if (it != index_.end()) throw InputError("duplicate CSP variable " + name);
  int id = static_cast<int>(names_.size());
  index_.emplace(name, id);
  names_.push_back(name);
  grow(id + 1);
  return id;
}

int Qcsp::variable(const std::string& name) {
  auto it = index_.find(name);
  if (it != index_.end()) return it->second;
  int id = static_cast<int>(names_.size());
  index_.emplace(name, id);
  names_.push_back(name);
  grow(id + 1);
  return id;
}

std::optional<int> Qcsp::find_variable(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void Qcsp::grow(int n) {
  std::vector<uint32_t> next(static_cast<size_t>(n) * n, alg_->full_mask());
  int old = n - 1;
  for (int i = 0; i < old; ++i)
    for (int j = 0; j < old; ++j)
      next[static_cast<size_t>(i) * n + j] = edges_[static_cast<size_t>(i) * old + j];
  edges_ = std::move(next);
  for (int i = 0; i < n; ++i) at(i, i) = 1u << alg_->identity_atom();
}

void Qcsp::constrain(int x, int y, uint32_t mask) {
  if (x == y) {
    at(x, x) &= mask & alg_->converse_mask(mask);
    return;
  }
  at(x, y) &= mask;
  at(y, x) = alg_->converse_mask(at(x, y));
}

uint32_t Qcsp::edge(int x, int y) const { return at(x, y); }

bool Qcsp::path_consistency() {
  int n = size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        uint32_t cij = at(i, j);
        if (cij == 0) return false;
        for (int k = 0; k < n; ++k) {
          uint32_t refined = cij & alg_->compose_mask(at(i, k), at(k, j));
          if (refined != cij) {
            cij = refined;
            if (cij == 0) return false;
            changed = true;
          }
        }
        at(i, j) = cij;
        at(j, i) = alg_->converse_mask(cij);
      }
    }
  }
  return true;
}

namespace {

bool refine_search(Qcsp& net) {
  if (!net.path_consistency()) return false;
  int n = net.size();
  int bx = -1, by = -1, best = 33;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int bits = std::popcount(net.edge(i, j));
      if (bits > 1 && bits < best) {
        best = bits;
        bx = i;
        by = j;
      }
    }
  }
  if (bx < 0) return true;  // all edges atomic and path consistent
  uint32_t options = net.edge(bx, by);
  for (int a = 0; a < net.algebra().atom_count(); ++a) {
    if (!((options >> a) & 1u)) continue;
    Qcsp branch = net;
    branch.constrain(bx, by, 1u << a);
    if (refine_search(branch)) {
      net = std::move(branch);
      return true;
    }
  }
  return false;
}

}  // namespace

bool Qcsp::consistent(Qcsp* scenario_out) const {
  Qcsp work = *this;
  if (!refine_search(work)) return false;
  if (scenario_out) *scenario_out = std::move(work);
  return true;
}

}  // namespace stal
