#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ainf/ainfty.hpp"
#include "ainf/twisted.hpp"

namespace ainf {

/// "Q" or "F_p" (the document form {"Fp": p} is handled by parse_category).
FieldSpec parse_field(std::string_view text);

/// Category document: field, objects, homs, ops (m-convention), units,
/// max_arity. Throws InputError with a JSON-pointer location.
std::shared_ptr<AInftyCategory> parse_category(std::string_view text);
/// Canonical form: sorted keys, basis order kept, canonical coefficients,
/// strict unit compositions left implicit.
std::string format_category(const AInftyCategory& c);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);
std::shared_ptr<AInftyCategory> load_category(const std::filesystem::path& path);

/// Twisted complexes over `base`:
/// {"objects": [{"name", "summands": [{"object", "shift"}], "delta": [{"row", "col", "terms"}]}]}.
/// An optional "category" key names the base category file.
std::vector<TwObject> parse_tw(const Category& base, std::string_view text);
std::string format_tw(const Category& base, const std::vector<TwObject>& objects);
/// The "category" key of a Tw document, if present.
std::string tw_category_ref(std::string_view text);

/// Morphism of `tw` given as block entries:
/// {"src", "dst", "degree", "entries": [{"row", "col", "terms"}]}.
Morphism parse_tw_map(const TwCategory& tw, std::string_view text);
std::string format_tw_map(const TwCategory& tw, const Morphism& f);

/// "SRC->DST:coeff*label+label+..."; "SRC->DST@d:0" is the zero map of degree d.
Morphism parse_element(const Category& c, std::string_view text);
/// Inverse of parse_element.
std::string format_element(const Category& c, const Morphism& f);

}  // namespace ainf
