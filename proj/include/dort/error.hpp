#pragma once

#include <stdexcept>
#include <string>

namespace dort {

// Error kinds map onto the CLI exit codes: spec/usage -> 2, training -> 3,
// runtime -> 4, evaluation input -> 5.
enum class Errc {
    spec_parse,
    parse_error,
    missing_frame,
    spec_overflow,
    degenerate_dataset,
    shape_mismatch,
    image_too_small,
    empty_sequence,
    missing_groundtruth,
    io_error,
    length_mismatch,
    missing_ids,
    eval_input,
    invalid_argument,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const { return code_; }

    int exit_code() const {
        switch (code_) {
        case Errc::spec_parse:
        case Errc::parse_error:
        case Errc::spec_overflow:
        case Errc::invalid_argument:
            return 2;
        case Errc::degenerate_dataset:
            return 3;
        case Errc::length_mismatch:
        case Errc::missing_ids:
        case Errc::eval_input:
            return 5;
        default:
            return 4;
        }
    }

private:
    Errc code_;
};

}  // namespace dort
