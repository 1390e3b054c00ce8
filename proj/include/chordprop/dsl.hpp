#pragma once

#include <string>
#include <variant>

#include "chordprop/bv_checker.hpp"
#include "chordprop/chord_diagram.hpp"
#include "chordprop/fatgraph.hpp"

namespace chordprop {

using ParsedValue = std::variant<FatGraph, ChordDiagram, GradedBasisAlgebra>;

/// Parses one `.sd` value: a `fatgraph {...}`, `diagram {...}` or
/// `algebra {...}` block. Construction errors of the target module are
/// re-raised as ParseError with the source position of the offending field;
/// malformed text raises ParseError with code SyntaxError. Never crashes on
/// arbitrary input bytes.
ParsedValue parse(const std::string& text);

/// Canonical text form; parse(serialize(x)) == x.
std::string serialize(const FatGraph& g);
std::string serialize(const ChordDiagram& d);
std::string serialize(const GradedBasisAlgebra& a);
std::string serialize(const ParsedValue& v);

/// Deterministic DOT (Graphviz) rendering. Ghost edges are dashed and the
/// diagram variant labels boundary roles and markings.
std::string export_dot(const FatGraph& g);
std::string export_dot(const ChordDiagram& d);

}  // namespace chordprop
