#pragma once

#include <stdexcept>
#include <string>

namespace edasvm {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define EDASVM_ERROR_TYPE(Name)                                   \
  struct Name : Error {                                           \
    explicit Name(const std::string& m) : Error(#Name ": " + m) {} \
  }

// corpus
EDASVM_ERROR_TYPE(MissingColumn);
EDASVM_ERROR_TYPE(UnknownLabel);
EDASVM_ERROR_TYPE(EmptyDataset);
EDASVM_ERROR_TYPE(DegenerateSplit);

// lexicons
EDASVM_ERROR_TYPE(MalformedLine);
EDASVM_ERROR_TYPE(DuplicateKey);
EDASVM_ERROR_TYPE(EmptyResource);

// preprocess / augment
EDASVM_ERROR_TYPE(EmptyAfterPreprocess);
EDASVM_ERROR_TYPE(EmptyInput);

// vectorize / svm
EDASVM_ERROR_TYPE(DomainError);
EDASVM_ERROR_TYPE(DimensionMismatch);
EDASVM_ERROR_TYPE(DegenerateLabels);
EDASVM_ERROR_TYPE(NonFinite);
EDASVM_ERROR_TYPE(SchemaMismatch);
EDASVM_ERROR_TYPE(CorruptFile);

// eval
EDASVM_ERROR_TYPE(LengthMismatch);
EDASVM_ERROR_TYPE(EmptyEvaluation);
EDASVM_ERROR_TYPE(TooFewSamples);
EDASVM_ERROR_TYPE(FoldDegenerate);

// harness
EDASVM_ERROR_TYPE(IoError);
EDASVM_ERROR_TYPE(ConfigError);

#undef EDASVM_ERROR_TYPE

}  // namespace edasvm
