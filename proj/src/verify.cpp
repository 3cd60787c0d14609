#include "motivic/verify.hpp"

#include <json.hpp>
#include <algorithm>
#include <sstream>

#include "motivic/ff_oracle.hpp"

namespace motivic {

std::vector<VerifyRecord> run_verify_grid(unsigned max_genus, unsigned max_punctures,
                                          const std::vector<long>& primes) {
    std::vector<long> ps = primes;
    std::sort(ps.begin(), ps.end());
    std::vector<VerifyRecord> out;
    for (unsigned g = 0; g <= max_genus; ++g)
        for (unsigned jp = 0; jp <= max_punctures; ++jp)
            for (unsigned jm = 0; jp + jm <= max_punctures; ++jm)
                for (unsigned mi = 0; jp + jm + mi <= max_punctures; ++mi) {
                    SurfaceSpec spec{g, jp, jm, mi};
                    Scalar tqft = evaluate_tqft(spec);
                    Scalar closed = closed_form(spec, FormulaVariant::Section5);
                    out.push_back({spec, 0, "tqft", "closed-section5",
                                   tqft.render(Format::Text), closed.render(Format::Text),
                                   tqft == closed});
                    for (long p : ps) {
                        ff::CrossCheck cc = ff::cross_check(spec, p);
                        std::ostringstream ev;
                        ev << cc.eval;
                        out.push_back({spec, p, "tqft@" + std::to_string(p),
                                       "count@" + std::to_string(p), ev.str(),
                                       cc.count.get_str(), cc.pass});
                    }
                }
    return out;
}

bool all_pass(const std::vector<VerifyRecord>& records) {
    for (const auto& r : records)
        if (!r.pass) return false;
    return true;
}

std::string render_report(const std::vector<VerifyRecord>& records, Format f) {
    if (f == Format::Json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : records) {
            nlohmann::ordered_json j;
            j["spec"] = {{"genus", r.spec.genus},
                         {"jp", r.spec.jp},
                         {"jm", r.spec.jm},
                         {"mi", r.spec.mi}};
            if (r.prime)
                j["prime"] = r.prime;
            else
                j["prime"] = nullptr;
            j["method_a"] = r.method_a;
            j["method_b"] = r.method_b;
            j["value_a"] = r.value_a;
            j["value_b"] = r.value_b;
            j["pass"] = r.pass;
            arr.push_back(j);
        }
        return arr.dump();
    }
    std::ostringstream os;
    for (const auto& r : records) {
        os << (r.pass ? "PASS " : "FAIL ") << r.spec.describe() << " " << r.method_a << " vs "
           << r.method_b << ": " << r.value_a << (r.pass ? " == " : " != ") << r.value_b << "\n";
    }
    return os.str();
}

}  // namespace motivic
