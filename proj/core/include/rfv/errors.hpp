#pragma once

#include <stdexcept>
#include <string>

namespace rfv {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define RFV_DECLARE_ERROR(Name, default_msg)                    \
    class Name : public Error {                                 \
    public:                                                     \
        Name() : Error(default_msg) {}                          \
        explicit Name(const std::string& msg) : Error(msg) {}   \
    };

// geometry
RFV_DECLARE_ERROR(NonPositiveDepth, "depth must be > 0")
RFV_DECLARE_ERROR(BehindCamera, "point is behind the camera (z <= 0)")
RFV_DECLARE_ERROR(EmptyCloud, "point cloud is empty")
RFV_DECLARE_ERROR(IoError, "i/o failure")
RFV_DECLARE_ERROR(ParseError, "malformed input file")

// features
RFV_DECLARE_ERROR(ImageTooSmall, "image too small for keypoint detection")
RFV_DECLARE_ERROR(EmptyDatabase, "template database is empty")

// registration
RFV_DECLARE_ERROR(DegenerateConfiguration, "point configuration is degenerate")
RFV_DECLARE_ERROR(AllCorrespondencesRejected, "all icp correspondences rejected")
RFV_DECLARE_ERROR(InsufficientNeighbors, "a point has fewer than 3 neighbors in the normal radius")
RFV_DECLARE_ERROR(NoValidDepth, "no matched keypoint pixel has valid depth")

// rfid
RFV_DECLARE_ERROR(NonPositiveDistance, "distance must be > 0")
RFV_DECLARE_ERROR(TagNotFound, "tag not found in population")
RFV_DECLARE_ERROR(NotATemperatureTag, "tag has no temperature ic")
RFV_DECLARE_ERROR(ProtocolTimeout, "no response from reader")
RFV_DECLARE_ERROR(BadMagic, "frame magic mismatch")
RFV_DECLARE_ERROR(UnsupportedVersion, "unsupported protocol version")
RFV_DECLARE_ERROR(Truncated, "frame truncated or length mismatch")
RFV_DECLARE_ERROR(UnknownMessageType, "unknown message type")

// fusion
RFV_DECLARE_ERROR(UnknownObject, "object not registered")

// harness
RFV_DECLARE_ERROR(ObjectBehindCamera, "object must lie in front of the camera (z > 0.1 m)")

#undef RFV_DECLARE_ERROR

}  // namespace rfv
