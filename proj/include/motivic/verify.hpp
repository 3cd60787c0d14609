#pragma once

#include <string>
#include <vector>

#include "motivic/surface.hpp"

namespace motivic {

struct VerifyRecord {
    SurfaceSpec spec;
    long prime = 0;  // 0 for the symbolic cross-method record
    std::string method_a, method_b;
    std::string value_a, value_b;
    bool pass = false;
};

// For every genus <= max_genus and puncture multiset of size <= max_punctures,
// checks evaluate_tqft against closed_form(Section5) symbolically, then
// against the finite-field count at each prime. Records are ordered
// lexicographically in (genus, jp, jm, mi, prime).
std::vector<VerifyRecord> run_verify_grid(unsigned max_genus, unsigned max_punctures,
                                          const std::vector<long>& primes);

std::string render_report(const std::vector<VerifyRecord>& records, Format f);

bool all_pass(const std::vector<VerifyRecord>& records);

}  // namespace motivic
