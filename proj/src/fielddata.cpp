#include "cubic/fielddata.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cubic {

void BaseFieldData::validate() const {
    if (degree < 1) throw std::invalid_argument("field data: degree must be positive");
    if (degree != r1 + 2 * r2)
        throw std::invalid_argument("field data: degree != r1 + 2*r2");
    if (class_number < 1) throw std::invalid_argument("field data: class number must be positive");
    if (three_torsion < 1 || class_number % three_torsion != 0)
        throw std::invalid_argument("field data: three_torsion must divide the class number");
    {
        Int t = three_torsion;
        while (t % 3 == 0) t /= 3;
        if (t != 1) throw std::invalid_argument("field data: three_torsion must be a power of 3");
    }
    if (discriminant == 0) throw std::invalid_argument("field data: zero discriminant");
    if (residue <= 0) throw std::invalid_argument("field data: residue must be positive");
    if (zeta2 <= 0 || zeta4 <= 0)
        throw std::invalid_argument("field data: zeta(2), zeta(4) must be positive");
}

BaseFieldData base_field_q() {
    const QConstants& qc = q_constants();
    BaseFieldData k;
    k.name = "Q";
    k.degree = 1;
    k.discriminant = 1;
    k.r1 = 1;
    k.r2 = 0;
    k.class_number = 1;
    k.three_torsion = 1;
    k.residue = qc.residue;
    k.zeta2 = qc.zeta2;
    k.zeta4 = qc.zeta4;
    k.zeta_third = qc.zeta_third;
    k.validate();
    return k;
}

namespace {

Real real_from_json(const nlohmann::json& v, const char* what) {
    if (v.is_string()) return Real(v.get<std::string>());
    if (v.is_number()) return Real(v.dump());
    throw std::invalid_argument(std::string("field data: ") + what + " must be a number or string");
}

Int int_from_json(const nlohmann::json& v, const char* what) {
    if (v.is_string()) return Int(v.get<std::string>());
    if (v.is_number_integer()) return Int(v.get<long long>());
    throw std::invalid_argument(std::string("field data: ") + what + " must be an integer");
}

}  // namespace

BaseFieldData base_field_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    BaseFieldData k;
    k.name = j.value("name", std::string("custom"));
    k.degree = j.at("degree").get<int>();
    k.discriminant = int_from_json(j.at("discriminant"), "discriminant");
    k.r1 = j.at("r1").get<int>();
    k.r2 = j.at("r2").get<int>();
    k.class_number = int_from_json(j.at("class_number"), "class_number");
    k.three_torsion = int_from_json(j.at("three_torsion"), "three_torsion");
    k.residue = real_from_json(j.at("residue_zeta_at_1"), "residue_zeta_at_1");
    const auto& z = j.at("zeta_values");
    k.zeta2 = real_from_json(z.at("2"), "zeta(2)");
    k.zeta4 = real_from_json(z.at("4"), "zeta(4)");
    k.zeta_third = real_from_json(z.at("1/3"), "zeta(1/3)");
    k.validate();
    return k;
}

BaseFieldData base_field_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("field data: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return base_field_from_json(buf.str());
}

}  // namespace cubic
