#pragma once

#include <string>
#include <string_view>

#include "dimzero/certifier.hpp"
#include "dimzero/semiring_io.hpp"

namespace dimzero {

/// Line-oriented text form of a certificate:
///
///   dimzero-certificate 1
///   semiring <size> <fingerprint hex>
///   params <d> <x> <y>
///   branch pad|construct
///   order <m>
///   f <d·x entry indices>                  (m lines)
///   terms <k>
///   term <i>
///   s <rows> <cols> <entries>
///   D <rows> <v> <entries>
///   E <v> <cols> <entries>
///   zero-columns <y - v>
///   a <p/q>
///   x-diagonal <m>
///   <m fractions>
///   det <p/q>
///   checks <c>
///   check <name> pass|fail                 (c lines)
///   end
///
/// Writing is deterministic; equal certificates give identical bytes.
std::string write_certificate(const Certificate& cert);

/// Throws ParseError on malformed input.
Certificate parse_certificate(std::string_view text);

Certificate load_certificate(const std::string& path);

}  // namespace dimzero
