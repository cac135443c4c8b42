#include "formcert/grade.hpp"

#include <sstream>

#include "formcert/error.hpp"

namespace formcert {

bool Grade::is_zero() const {
  for (long v : z)
    if (v != 0) return false;
  for (int v : parity)
    if (v != 0) return false;
  return true;
}

int Grade::total_parity() const {
  int s = 0;
  for (int v : parity) s ^= (v & 1);
  return s;
}

Grade Grade::operator+(const Grade& o) const {
  if (z.size() != o.z.size() || parity.size() != o.parity.size())
    throw ValidationError("grade addition: rank mismatch");
  Grade r = *this;
  for (std::size_t i = 0; i < r.z.size(); ++i) r.z[i] += o.z[i];
  for (std::size_t i = 0; i < r.parity.size(); ++i) r.parity[i] = (r.parity[i] + o.parity[i]) & 1;
  return r;
}

Grade Grade::operator-() const {
  Grade r = *this;
  for (auto& v : r.z) v = -v;
  // parity components are their own inverses
  return r;
}

std::string Grade::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < z.size(); ++i) os << (i ? "," : "") << z[i];
  if (!parity.empty()) {
    os << (z.empty() ? "" : ";");
    for (std::size_t i = 0; i < parity.size(); ++i) os << (i ? "," : "") << parity[i];
  }
  os << ")";
  return os.str();
}

}  // namespace formcert
