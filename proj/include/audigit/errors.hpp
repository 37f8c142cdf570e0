#pragma once

#include <stdexcept>
#include <string>

namespace audigit {

// One exception type per failure mode so callers can catch precisely.
#define AUDIGIT_DEFINE_ERROR(NAME)                                     \
  struct NAME : std::runtime_error {                                   \
    explicit NAME(const std::string& what)                             \
        : std::runtime_error(std::string(#NAME) + ": " + what) {}      \
  }

// audio / container decoding
AUDIGIT_DEFINE_ERROR(MalformedContainer);
AUDIGIT_DEFINE_ERROR(UnsupportedEncoding);

// dataset ingestion and splitting
AUDIGIT_DEFINE_ERROR(EmptyDataset);
AUDIGIT_DEFINE_ERROR(UnlabeledFile);
AUDIGIT_DEFINE_ERROR(ClassTooSmall);

// dsp
AUDIGIT_DEFINE_ERROR(DomainError);
AUDIGIT_DEFINE_ERROR(SignalTooShort);
AUDIGIT_DEFINE_ERROR(BadFrameLength);
AUDIGIT_DEFINE_ERROR(ConfigError);

// network engine
AUDIGIT_DEFINE_ERROR(ShapeMismatch);
AUDIGIT_DEFINE_ERROR(NonFiniteGradient);
AUDIGIT_DEFINE_ERROR(CorruptCheckpoint);

// ensembling and metrics
AUDIGIT_DEFINE_ERROR(EmptyEnsemble);
AUDIGIT_DEFINE_ERROR(LengthMismatch);
AUDIGIT_DEFINE_ERROR(FeatureKindMismatch);
AUDIGIT_DEFINE_ERROR(EmptyInput);

// filesystem plumbing
AUDIGIT_DEFINE_ERROR(IoError);

#undef AUDIGIT_DEFINE_ERROR

}  // namespace audigit
