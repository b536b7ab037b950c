#pragma once

#include <string>
#include <vector>

#include "sympow/ideal.hpp"
#include "sympow/symbolic.hpp"

namespace sympow {

// A rational self-map of projective space given by forms: one form per
// variable, all homogeneous of one degree d >= 2. The ideal the forms
// generate is the base ideal of the map.
struct CremonaMap {
    Ring ring;
    std::vector<Poly> forms;
    Ideal base_ideal;
    long degree = 0;
};

// Validates the shape (as many forms as variables, at least two, all
// homogeneous of a common degree at least two) and throws DomainError on
// violations. Degree-one form lists such as the identity are rejected.
CremonaMap make_cremona_map(Ring r, std::vector<Poly> forms);

// d' <= d^(n-1): Gabber's bound on the degree of the inverse of a
// Cremona transformation of P^n, evaluated in exact arithmetic.
bool gabber_bound_ok(long d, long d_prime, int n);

// Outcome of checking that G inverts F: composing must give
// g_i(f) = D * x_i for a single source inversion D = g_0(f) / x_0.
struct CremonaCheck {
    bool verified = false;
    Poly D;                     // source inversion, meaningful when verified
    long d = 0;                 // degree of the forms of F
    long d_prime = 0;           // degree of the forms of G
    bool gabber_ok = false;     // d' <= d^(n-1)
    long predicted_failure = 0; // the exponent d' where rigidity should break
    std::string diagnostic;     // why verification failed, empty on success
};

CremonaCheck verify_inverse(const CremonaMap& F, const CremonaMap& G);

// The cheap depth-positivity test: I equals its saturation at the
// irrelevant ideal exactly when depth R/I > 0.
bool depth_positive_check(const Ideal& I, const GuardLimits& guard = {});
bool depth_positive_check(const CremonaMap& F, const GuardLimits& guard = {});

// Standing of one hypothesis of the non-rigidity criterion.
enum class HypothesisStatus {
    Checked,  // machine-verified to hold
    Asserted, // declared by the caller, not machine-checkable here
    Violated, // machine-refuted
    Unknown,
};

std::string hypothesis_status_str(HypothesisStatus s);

// Drives the prediction that a verified inverse pair with positive depth
// and m-primary symbolic defects has I^l = I^(l) for l < d' and a failure
// exactly at d', witnessed by D itself.
struct ProbeReport {
    CremonaCheck check;
    bool depth_positive = false;
    HypothesisStatus hypothesis_i = HypothesisStatus::Unknown;   // depth(R/I) > 0
    HypothesisStatus hypothesis_ii = HypothesisStatus::Asserted; // defects m-primary or zero
    std::string hypothesis_note;
    std::vector<SymbolicReport> reports; // l = 1..min(check_up_to, d')
    int observed_failure = 0;            // least l with equal = false, 0 when none
    bool membership_checked = false;     // D-membership ran (check_up_to >= d')
    bool d_in_symbolic = false;          // D in I^(d')
    bool d_not_in_ordinary = false;      // D outside I^d'
    bool prediction_matched = false;     // observed failure is exactly d'
    std::string summary;
};

ProbeReport nonrigidity_probe(const CremonaMap& F, const CremonaMap& G,
                              const SymbolicStrategy& strategy, int check_up_to,
                              const GuardLimits& guard = {});

} // namespace sympow
