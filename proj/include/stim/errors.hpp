#pragma once

#include <stdexcept>
#include <string>

namespace stim {

// Missing or unreadable files and streams.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Content that exists but does not decode: bad magic, truncated payloads,
// malformed text.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated call contracts: dimension mismatches, empty inputs where data is
// required, invalid parameter combinations detected at call time.
struct ContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A split protocol that cannot be satisfied by the dataset at hand.
struct ProtocolError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rejected configuration, raised before any data is touched.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace stim
