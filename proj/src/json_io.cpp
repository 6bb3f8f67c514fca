#include "genusbound/json_io.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace genusbound {

using nlohmann::json;

json vec_to_json(const Vec& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

Vec vec_from_json(const json& j) {
    if (!j.is_array()) throw InvalidArgumentError("expected an array of integers");
    Vec v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer())
            throw InvalidArgumentError("class coefficients must be integers");
        v[static_cast<Eigen::Index>(i)] = j[i].get<Int>();
    }
    return v;
}

AlgebraDescriptor algebra_from_json(const json& j) {
    if (!j.is_object()) throw InvalidArgumentError("algebra: expected a JSON object");
    if (!j.contains("form")) throw InvalidArgumentError("algebra: missing \"form\"");
    const json& f = j.at("form");
    if (!f.is_object() || !f.contains("tag"))
        throw InvalidArgumentError("algebra: form needs a \"tag\"");
    std::string tag = f.at("tag").get<std::string>();
    FormTag form_tag;
    if (tag == "odd") {
        if (!f.contains("n")) throw InvalidArgumentError("form odd: missing \"n\"");
        form_tag = FormTag::odd(f.at("n").get<Int>());
    } else if (tag == "even") {
        if (!f.contains("q")) throw InvalidArgumentError("form even: missing \"q\"");
        form_tag = FormTag::even(f.at("q").get<Int>());
    } else if (tag == "hyperbolic") {
        form_tag = FormTag::hyperbolic();
    } else if (tag == "v") {
        form_tag = FormTag::vform();
    } else {
        throw InvalidArgumentError("form: unknown tag \"" + tag + "\"");
    }
    Int b1 = j.value("b1", Int{0});
    Int tilde_b1 = j.value("tilde_b1", Int{0});
    std::optional<Vec> fgen;
    if (j.contains("F")) fgen = vec_from_json(j.at("F"));
    return make_algebra(make_form(form_tag), b1, tilde_b1, std::move(fgen));
}

json algebra_to_json(const AlgebraDescriptor& alg) {
    json f;
    switch (alg.form.tag.kind) {
        case FormKind::Odd:
            f = {{"tag", "odd"}, {"n", alg.form.tag.param}};
            break;
        case FormKind::Even:
            f = {{"tag", "even"}, {"q", alg.form.tag.param}};
            break;
        case FormKind::Hyperbolic:
            f = {{"tag", "hyperbolic"}};
            break;
        case FormKind::Vform:
            f = {{"tag", "v"}};
            break;
    }
    json out = {{"form", f}, {"b1", alg.b1}, {"tilde_b1", alg.tilde_b1}};
    if (alg.im_t_generator) out["F"] = vec_to_json(*alg.im_t_generator);
    return out;
}

static std::string move_name(ReductionMove::Kind k) {
    switch (k) {
        case ReductionMove::Kind::Negate: return "negate";
        case ReductionMove::Kind::SwapFB: return "swap_fb";
        case ReductionMove::Kind::ReflectE: return "reflect_e";
        case ReductionMove::Kind::PermuteE: return "permute_e";
        case ReductionMove::Kind::CremonaReflect: return "cremona";
        case ReductionMove::Kind::EOmega: return "e_omega";
    }
    return "?";
}

json trace_to_json(const ReductionTrace& tr) {
    json moves = json::array();
    for (const auto& m : tr.moves) {
        json jm = {{"move", move_name(m.kind)}};
        if (m.kind == ReductionMove::Kind::ReflectE) jm["i"] = m.i;
        if (m.kind == ReductionMove::Kind::PermuteE) {
            jm["i"] = m.i;
            jm["j"] = m.j;
        }
        if (m.kind == ReductionMove::Kind::EOmega) jm["omega"] = vec_to_json(m.omega);
        moves.push_back(std::move(jm));
    }
    return {{"input", vec_to_json(tr.input)},
            {"output", vec_to_json(tr.output)},
            {"moves", std::move(moves)}};
}

ReductionTrace trace_from_json(const json& j) {
    ReductionTrace tr;
    tr.input = vec_from_json(j.at("input"));
    tr.output = vec_from_json(j.at("output"));
    for (const json& jm : j.at("moves")) {
        std::string name = jm.at("move").get<std::string>();
        if (name == "negate")
            tr.moves.push_back(ReductionMove::negate());
        else if (name == "swap_fb")
            tr.moves.push_back(ReductionMove::swap_fb());
        else if (name == "reflect_e")
            tr.moves.push_back(ReductionMove::reflect_e(jm.at("i").get<Int>()));
        else if (name == "permute_e")
            tr.moves.push_back(
                ReductionMove::permute_e(jm.at("i").get<Int>(), jm.at("j").get<Int>()));
        else if (name == "cremona")
            tr.moves.push_back(ReductionMove::cremona());
        else if (name == "e_omega")
            tr.moves.push_back(ReductionMove::e_omega_move(vec_from_json(jm.at("omega"))));
        else
            throw InvalidArgumentError("trace: unknown move \"" + name + "\"");
    }
    return tr;
}

Vec parse_class_list(const std::string& text) {
    std::string s = text;
    std::erase(s, '[');
    std::erase(s, ']');
    std::erase(s, ' ');
    if (s.empty()) throw InvalidArgumentError("empty class list");
    std::vector<Int> coeffs;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw InvalidArgumentError("malformed class list: " + text);
        std::size_t pos = 0;
        Int v = 0;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw InvalidArgumentError("not an integer: " + item);
        }
        if (pos != item.size()) throw InvalidArgumentError("not an integer: " + item);
        coeffs.push_back(v);
    }
    Vec v(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) v[static_cast<Eigen::Index>(i)] = coeffs[i];
    return v;
}

}  // namespace genusbound
