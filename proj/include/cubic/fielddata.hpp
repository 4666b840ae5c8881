#ifndef CUBIC_FIELDDATA_HPP
#define CUBIC_FIELDDATA_HPP

#include <string>

#include "cubic/numeric.hpp"
#include "cubic/realconst.hpp"

namespace cubic {

// Invariants of the base number field entering the residue formulas. For Q
// everything is computed internally; for other fields the zeta data is
// configuration input.
struct BaseFieldData {
    std::string name = "Q";
    int degree = 1;
    Int discriminant = 1;
    int r1 = 1;
    int r2 = 0;
    Int class_number = 1;
    Int three_torsion = 1;  // # of 3-torsion elements of the class group
    Real residue = Real(1);  // residue of zeta_k at s = 1
    Real zeta2 = Real(0);
    Real zeta4 = Real(0);
    Real zeta_third = Real(0);

    void validate() const;  // throws std::invalid_argument
};

BaseFieldData base_field_q();

// {"degree":..,"discriminant":..,"r1":..,"r2":..,"class_number":..,
//  "three_torsion":..,"residue_zeta_at_1":..,"zeta_values":{"2":..,"4":..,"1/3":..}}
BaseFieldData base_field_from_json(const std::string& json_text);
BaseFieldData base_field_from_json_file(const std::string& path);

}  // namespace cubic

#endif
