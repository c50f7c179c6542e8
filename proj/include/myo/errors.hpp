#pragma once

#include <stdexcept>
#include <string>

namespace myo {

// Base class for every error the engine raises on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define MYO_DEFINE_ERROR(Name)                                        \
    class Name : public Error {                                       \
    public:                                                           \
        explicit Name(const std::string& msg) : Error(#Name ": " + msg) {} \
    }

// signal
MYO_DEFINE_ERROR(WindowTooShort);
MYO_DEFINE_ERROR(ChannelMismatch);
MYO_DEFINE_ERROR(NonMonotoneTimestamps);
MYO_DEFINE_ERROR(GapExceedsTolerance);
MYO_DEFINE_ERROR(InsufficientHistory);
MYO_DEFINE_ERROR(NotFitted);
MYO_DEFINE_ERROR(EmptyTrainingSet);

// kinematics
MYO_DEFINE_ERROR(DegenerateRange);
MYO_DEFINE_ERROR(UncalibratedDof);

// neural
MYO_DEFINE_ERROR(ShapeMismatch);
MYO_DEFINE_ERROR(NonFiniteLoss);

// models
MYO_DEFINE_ERROR(SpecMismatch);
MYO_DEFINE_ERROR(NotTrained);
MYO_DEFINE_ERROR(EmptyDataset);
MYO_DEFINE_ERROR(TargetOutOfRange);
MYO_DEFINE_ERROR(NoConvergence);
MYO_DEFINE_ERROR(UnsupportedModel);

// metrics
MYO_DEFINE_ERROR(LengthMismatch);
MYO_DEFINE_ERROR(EmptySeries);
MYO_DEFINE_ERROR(ConstantTruth);
MYO_DEFINE_ERROR(SeriesTooShort);
MYO_DEFINE_ERROR(InsufficientData);

// simulator
MYO_DEFINE_ERROR(RateMismatch);

// protocols
MYO_DEFINE_ERROR(WrongTrialCount);
MYO_DEFINE_ERROR(SessionTooShort);
MYO_DEFINE_ERROR(BudgetExceeded);

// storage
MYO_DEFINE_ERROR(MissingFile);
MYO_DEFINE_ERROR(SchemaMismatch);
MYO_DEFINE_ERROR(ChecksumMismatch);
MYO_DEFINE_ERROR(VersionMismatch);
MYO_DEFINE_ERROR(CorruptCheckpoint);
MYO_DEFINE_ERROR(ParseError);
MYO_DEFINE_ERROR(UnknownKey);
MYO_DEFINE_ERROR(OutOfRangeValue);

// sono
MYO_DEFINE_ERROR(BadFactor);
MYO_DEFINE_ERROR(InsufficientImages);
MYO_DEFINE_ERROR(DimMismatch);

#undef MYO_DEFINE_ERROR

} // namespace myo
