#include "tamecert/errors.hpp"

namespace tamecert {

JacobiViolation::JacobiViolation(std::array<std::size_t, 3> triple, Vector residual)
    : Error("Jacobi identity fails on basis triple (" + std::to_string(triple[0]) + ", " +
            std::to_string(triple[1]) + ", " + std::to_string(triple[2]) +
            "), residual " + to_string(residual)),
      triple_(triple),
      residual_(std::move(residual)) {}

RelationViolation::RelationViolation(std::string relation, Vector y, Vector residual)
    : Error("relation '" + relation + "' fails for Y = " + to_string(y) + ", residual " +
            to_string(residual)),
      relation_(std::move(relation)),
      y_(std::move(y)),
      residual_(std::move(residual)) {}

}  // namespace tamecert
