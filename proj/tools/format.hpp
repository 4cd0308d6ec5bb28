#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>

#include "hgl/comodule.hpp"

namespace hgl::cli {

/// Malformed input file; the message carries the file and the offending JSON location.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A linear map between coordinate spaces, e.g. a cleaving map γ.
struct LinearMapFile {
    Matrix map;
};

using Document = std::variant<HopfAlgebra, AlgebraData, ComoduleAlgebra, Subspace, LinearMapFile>;

/// Reads any of the five document kinds; "hopf" references in comodule files are
/// resolved relative to the referencing file.
Document parse_file(const std::filesystem::path& path);
Document parse_text(const std::string& text, const std::filesystem::path& origin = {});

HopfAlgebra parse_hopf(const std::filesystem::path& path);
AlgebraData parse_algebra(const std::filesystem::path& path);
ComoduleAlgebra parse_comodule(const std::filesystem::path& path);
Subspace parse_subspace(const std::filesystem::path& path);
Matrix parse_map(const std::filesystem::path& path);

/// Canonical text; parse_text(serialise(x)) reproduces x exactly.
std::string serialise(const HopfAlgebra& h);
std::string serialise(const AlgebraData& a);
/// The Hopf algebra is written inline.
std::string serialise(const ComoduleAlgebra& a);
std::string serialise(const Subspace& s);
std::string serialise_map(const Matrix& m);

}  // namespace hgl::cli
