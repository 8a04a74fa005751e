// Prints Z_k(2), Z_k(-1), their ratio and beta^3 for a few global fields.
// The ratio and beta^3 agree because Z_k(1 - s) = beta^{2s-1} Z_k(s).

#include <cmath>
#include <cstdio>
#include <string>

#include "globalzeta/globalzeta.hpp"

int main() {
  for (const char* spec : {"Q", "Q(sqrt=-1)", "Q(sqrt=-3)", "Q(sqrt=5)", "Fq(T)?q=5", "curve?q=5&N=9"}) {
    const auto field = gz::parse_field_spec(spec).field;
    const auto beta = gz::covolume(field);
    const double z2 = gz::completed_zeta_value(field, 2.0).real();
    const double zm1 = gz::completed_zeta_value(field, -1.0).real();
    std::printf("%-20s beta=%-10s Z(2)=%-22s Z(-1)=%-22s ratio=%-20s beta^3=%s\n", gz::format_field_spec(field).c_str(),
                beta.to_string().c_str(), gz::format_real(z2).c_str(), gz::format_real(zm1).c_str(),
                gz::format_real(zm1 / z2).c_str(), gz::format_real(std::pow(beta.value(), 3.0)).c_str());
  }
  return 0;
}
