#include "osc/pbf.hpp"

namespace osc {

const char* to_string(FormulaShape s) {
    switch (s) {
    case FormulaShape::atomic:
        return "atomic";
    case FormulaShape::constant:
        return "constant";
    case FormulaShape::disjunctive:
        return "disjunctive";
    case FormulaShape::conjunctive:
        return "conjunctive";
    case FormulaShape::general:
        return "general";
    }
    return "?";
}

} // namespace osc
