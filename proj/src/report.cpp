#include "wkl/report.hpp"

#include <cstdio>
#include <sstream>

namespace wkl {

std::string format_double(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string element_string(const RingSpec& spec, int64_t index) {
    if (index < 0) return "-";
    RingElt x = spec.element_at(index);
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < x.d.size(); ++i) os << (i ? "," : "") << x.d[i];
    os << "]";
    return os.str();
}

ordered_json cyclo_json(const CycloVec& v) {
    return ordered_json{{"modulus", v.modulus()},
                        {"coefficients", v.coeffs()},
                        {"canonical", v.canonical()}};
}

ordered_json params_json(const KlParams& P) {
    return ordered_json{{"k", P.k},          {"v", P.v},
                        {"c", P.c},          {"c_tilde", P.c_tilde},
                        {"w", P.w},          {"w_prime", P.w_prime},
                        {"k_star", P.k_star}, {"k_prime", P.k_prime}};
}

ordered_json bound_report_json(const BoundReport& R, const RingSpec& spec) {
    ordered_json viol = ordered_json::array();
    for (int64_t i : R.strict_violation_indices)
        viol.push_back(ordered_json{{"index", i}, {"x", element_string(spec, i)}});
    ordered_json j{
        {"spec", R.spec},
        {"k", R.k},
        {"psi_seed", R.psi_seed},
        {"params", params_json(R.params)},
        {"upper",
         {{"strict_bound", R.strict_bound},
          {"strict_ok", R.strict_ok},
          {"violations", viol},
          {"class_bound", R.class_bound},
          {"class_ok", R.class_ok},
          {"max_abs", R.max_abs},
          {"argmax", element_string(spec, R.argmax_index)}}},
        {"lower",
         {{"target", R.lower_target},
          {"found", R.lower_found},
          {"witness", element_string(spec, R.lower_witness_index)}}},
        {"vanishing",
         {{"nonzero_count", R.nonzero_count},
          {"bound", R.vanish_bound},
          {"ok", R.vanish_ok},
          {"nonunit_nonzero_count", R.nonunit_nonzero_count}}},
        {"plancherel",
         {{"computed", R.plancherel_computed},
          {"expected", R.plancherel_expected},
          {"reference_qkn", R.plancherel_reference},
          {"ok", R.plancherel_ok}}},
        {"closed_forms",
         {{"applies", R.closed_form_applies}, {"ok", R.closed_form_ok}, {"note", R.closed_form_note}}},
    };
    if (R.stationary_matches)
        j["stationary_matches"] = *R.stationary_matches;
    return j;
}

ordered_json interval_survey_json(const IntervalSurvey& S) {
    return ordered_json{
        {"q", S.cfg.q()},
        {"k", S.cfg.k},
        {"n", S.cfg.n},
        {"intervals", S.cfg.interval_count()},
        {"main_term", S.cfg.main_term()},
        {"identity_ok", S.identity_ok},
        {"identity_failures", S.identity_failures},
        {"total_mass_ok", S.total_mass_ok},
        {"nonzero",
         {{"count", S.nonzero_errors}, {"bound", S.nonzero_bound}, {"ok", S.nonzero_ok}}},
        {"mass", {{"value", S.error_mass}, {"bound", S.mass_bound}, {"ok", S.mass_ok}}},
        {"max_error",
         {{"square", S.max_error2}, {"target", S.max_error_target}, {"ok", S.max_error_ok}}},
    };
}

std::string bounds_csv_header() {
    return "spec,k,v,c,c_tilde,k_star,k_prime,max_abs,strict_bound,strict_ok,class_bound,"
           "class_ok,lower_target,lower_found,nonzero_count,vanish_bound,vanish_ok,"
           "plancherel_computed,plancherel_expected,plancherel_ok";
}

std::string bounds_csv_row(const BoundReport& R) {
    std::ostringstream os;
    os << R.spec << "," << R.k << "," << R.params.v << "," << R.params.c << ","
       << R.params.c_tilde << "," << R.params.k_star << "," << R.params.k_prime << ","
       << format_double(R.max_abs) << "," << format_double(R.strict_bound) << "," << R.strict_ok
       << "," << format_double(R.class_bound) << "," << R.class_ok << ","
       << format_double(R.lower_target) << "," << R.lower_found << "," << R.nonzero_count << ","
       << R.vanish_bound << "," << R.vanish_ok << "," << R.plancherel_computed << ","
       << R.plancherel_expected << "," << R.plancherel_ok;
    return os.str();
}

std::string intervals_csv(const IntervalSurvey& S) {
    std::ostringstream os;
    os << "q,k,n,interval,sum,error\n";
    for (size_t i = 0; i < S.sums.size(); ++i)
        os << S.cfg.q() << "," << S.cfg.k << "," << S.cfg.n << "," << i << "," << S.sums[i] << ","
           << S.errors[i] << "\n";
    return os.str();
}

ordered_json report_envelope(const std::string& command) {
    return ordered_json{{"schema", "wkl-report/1"}, {"command", command}};
}

} // namespace wkl
