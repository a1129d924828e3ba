#pragma once

#include <stdexcept>
#include <string>

namespace drum {

/// Error codes for every named failure mode in the library.
enum class errc {
    empty_input,
    bad_vertex,
    not_a_simplex,
    not_one_dimensional,
    shape,
    singular,
    not_symmetric,
    needs_refinement_context,
    needs_refinement,
    y_not_defined,
    not_kirchhoff,
    not_one_dim_hodge,
    bad_parameter,
    parse,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::empty_input: return "EmptyInput";
        case errc::bad_vertex: return "BadVertex";
        case errc::not_a_simplex: return "NotASimplex";
        case errc::not_one_dimensional: return "NotOneDimensional";
        case errc::shape: return "Shape";
        case errc::singular: return "Singular";
        case errc::not_symmetric: return "NotSymmetric";
        case errc::needs_refinement_context: return "NeedsRefinementContext";
        case errc::needs_refinement: return "NeedsRefinement";
        case errc::y_not_defined: return "YNotDefined";
        case errc::not_kirchhoff: return "NotKirchhoff";
        case errc::not_one_dim_hodge: return "NotOneDimHodge";
        case errc::bad_parameter: return "BadParameter";
        case errc::parse: return "Parse";
    }
    return "Unknown";
}

/// Exception carrying a library error code plus a human-readable message.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

}  // namespace drum
