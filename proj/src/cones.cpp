#include "grouporder/cones.hpp"

namespace grouporder {

const char* to_string(ConeClass c) {
    switch (c) {
    case ConeClass::Pos: return "Pos";
    case ConeClass::Neg: return "Neg";
    case ConeClass::Sub: return "Sub";
    }
    return "?";
}

const char* to_string(ConeCondition c) {
    switch (c) {
    case ConeCondition::Semigroup: return "Semigroup";
    case ConeCondition::Partition: return "Partition";
    case ConeCondition::CPC: return "CPC";
    case ConeCondition::Disjoint: return "Disjoint";
    case ConeCondition::ConjInv: return "ConjInv";
    }
    return "?";
}

} // namespace grouporder
