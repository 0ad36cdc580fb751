#include "invheat/fdm/grid.hpp"

#include <string>

#include "invheat/errors.hpp"

namespace invheat::fdm {

FdmGrid::FdmGrid(int m, int n, double horizon) : m_(m), n_(n), horizon_(horizon) {
    if (m < 4) throw DomainError("grid too coarse: M must be at least 4, got " + std::to_string(m));
    if (n < 1) throw DomainError("N must be at least 1, got " + std::to_string(n));
    if (!(horizon > 0.0)) throw DomainError("horizon T must be positive");
}

}  // namespace invheat::fdm
