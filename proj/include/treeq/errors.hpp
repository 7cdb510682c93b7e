#pragma once

#include <stdexcept>
#include <string>

namespace treeq {

/// Base class for every domain error raised by the library. The CLI maps any
/// Error to exit code 1; usage problems are reported separately as exit 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define TREEQ_DEFINE_ERROR(Name)                                  \
    struct Name : Error {                                         \
        explicit Name(const std::string& what) : Error(what) {}   \
    }

TREEQ_DEFINE_ERROR(NotPrime);
TREEQ_DEFINE_ERROR(OverflowDepth);
TREEQ_DEFINE_ERROR(MismatchedField);
TREEQ_DEFINE_ERROR(InvalidArgument);
TREEQ_DEFINE_ERROR(UnknownNode);
TREEQ_DEFINE_ERROR(NodeBudgetExceeded);
TREEQ_DEFINE_ERROR(ZeroVector);
TREEQ_DEFINE_ERROR(NotHermitian);
TREEQ_DEFINE_ERROR(NotNormalized);
TREEQ_DEFINE_ERROR(NonOrthonormalBasis);
TREEQ_DEFINE_ERROR(DimensionMismatch);
TREEQ_DEFINE_ERROR(NonphysicalTemperature);
TREEQ_DEFINE_ERROR(MismatchedSpace);
TREEQ_DEFINE_ERROR(NotDecomposable);
TREEQ_DEFINE_ERROR(BudgetExceeded);

#undef TREEQ_DEFINE_ERROR

}  // namespace treeq
