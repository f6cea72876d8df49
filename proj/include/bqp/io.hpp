#pragma once

#include <string>
#include <string_view>

#include "bqp/instance.hpp"
#include "bqp/transform.hpp"

namespace bqp {

enum class VariableDomain { binary, spin };

/// Instance text as read from disk. `bqp01` files are over {0,1},
/// `bqp11` files over {-1,+1} (use as_cut()).
struct ParsedInstance {
    VariableDomain domain;
    Instance terms;

    CutInstance as_cut() const { return {terms}; }
};

/// Format (UTF-8, '#' starts a comment, blank lines ignored):
///   bqp01 | bqp11
///   m n
///   c0
///   c_1 ... c_m
///   d_1 ... d_n
///   m rows of n entries of Q
/// Numbers are `[+-]int`, `[+-]int.frac` or `[+-]int/int`, read exactly.
/// Throws ParseError carrying the offending line.
ParsedInstance parse_instance(std::string_view text);

/// Canonical text; parse_instance(format_instance(x)) reproduces x.
std::string format_instance(const Instance& inst, VariableDomain domain = VariableDomain::binary);

/// Same layout with header `qp01`, a single size n, c0, c and n rows.
Qp01Problem parse_qp01(std::string_view text);
std::string format_qp01(const Qp01Problem& problem);

/// First significant token of a document (`bqp01`, `bqp11`, `qp01`, ...).
std::string peek_header(std::string_view text);

///   value <exact> <decimal>
///   x <m bits>
///   y <n bits>
std::string format_solution(const Solution& s);

std::string bits_to_string(const BinaryVector& v);

}  // namespace bqp
