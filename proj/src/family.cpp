#include "crosspart/family.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace crosspart {

Family::Family(int n, int k, std::vector<Partition> members) : Family(n, k) {
  for (const auto& p : members) {
    if (p.size() != k || !p.is_full_partition_of(n))
      throw std::invalid_argument("family member is not a full " + std::to_string(k) +
                                  "-partition of [" + std::to_string(n) + "]: " + p.str());
  }
  std::sort(members.begin(), members.end(), Partition::rgs_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  members_ = std::move(members);
  index_.insert(members_.begin(), members_.end());
}

void Family::add(const Partition& p) {
  if (p.size() != k_ || !p.is_full_partition_of(n_))
    throw std::invalid_argument("family member is not a full k-partition of [n]: " + p.str());
  if (index_.count(p)) return;
  auto it = std::lower_bound(members_.begin(), members_.end(), p, Partition::rgs_less);
  members_.insert(it, p);
  index_.insert(p);
}

void Family::write(std::ostream& os) const {
  os << "n=" << n_ << " k=" << k_ << "\n";
  for (const auto& p : members_) os << p.str() << "\n";
}

std::string Family::to_text() const {
  std::ostringstream os;
  write(os);
  return os.str();
}

Family Family::read(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw std::invalid_argument("family file: missing header");
  int n = -1, k = -1;
  {
    std::istringstream hs(header);
    std::string tok;
    while (hs >> tok) {
      if (tok.rfind("n=", 0) == 0)
        n = std::stoi(tok.substr(2));
      else if (tok.rfind("k=", 0) == 0)
        k = std::stoi(tok.substr(2));
      else
        throw std::invalid_argument("family file: bad header token '" + tok + "'");
    }
  }
  if (n < 1 || k < 1) throw std::invalid_argument("family file: header must set n= and k=");
  std::vector<Partition> members;
  std::string line;
  while (std::getline(is, line)) {
    // allow blank lines and #-comments
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '#') continue;
    members.push_back(Partition::parse(line));
  }
  return Family(n, k, std::move(members));
}

Family Family::load_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open family file: " + path);
  return read(f);
}

void Family::save_file(const std::string& path) const {
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot write family file: " + path);
  write(f);
}

Partition common_blocks(const std::vector<const Family*>& families) {
  if (families.empty()) throw std::invalid_argument("common_blocks: no families given");
  const Partition* acc = nullptr;
  Partition current;
  for (const Family* fam : families) {
    if (fam->empty()) throw std::invalid_argument("common_blocks: empty family");
    for (const auto& p : fam->members()) {
      if (!acc) {
        current = p;
        acc = &current;
      } else {
        current = current.shared_blocks(p);
      }
      if (current.empty()) return current;  // can only shrink
    }
  }
  return current;
}

Partition common_blocks(const Family& f) { return common_blocks({&f}); }

Partition common_blocks(const Family& f, const Family& g) { return common_blocks({&f, &g}); }

bool is_trivial_tuple(const std::vector<const Family*>& families, int t) {
  return common_blocks(families).size() >= t;
}

}  // namespace crosspart
