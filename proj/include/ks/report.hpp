#ifndef KS_REPORT_HPP
#define KS_REPORT_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ks {

/// One machine-checked certificate: a named condition, its outcome, and the
/// witness data that justifies it (dimensions, pivot signs, basis vectors).
struct Certificate {
  std::string name;
  bool passed = false;
  std::string witness;
};

class CertReport {
 public:
  void add(std::string name, bool passed, std::string witness = "") {
    items_.push_back({std::move(name), passed, std::move(witness)});
  }
  void merge(const CertReport& other, const std::string& prefix = "") {
    for (const Certificate& c : other.items_)
      items_.push_back({prefix + c.name, c.passed, c.witness});
  }
  bool all_passed() const {
    for (const Certificate& c : items_)
      if (!c.passed) return false;
    return true;
  }
  const std::vector<Certificate>& items() const { return items_; }
  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const Certificate& c : items_)
      if (!c.passed) out.push_back(c.name);
    return out;
  }
  void print(std::ostream& os, const std::string& indent = "  ") const {
    for (const Certificate& c : items_) {
      os << indent << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.witness.empty()) os << "  [" << c.witness << "]";
      os << "\n";
    }
  }

 private:
  std::vector<Certificate> items_;
};

/// Thrown when a certificate that the construction relies on fails; carries
/// the violated invariant's name.
struct certificate_error : std::runtime_error {
  explicit certificate_error(const std::string& invariant)
      : std::runtime_error("certificate failed: " + invariant) {}
};

}  // namespace ks

#endif  // KS_REPORT_HPP
