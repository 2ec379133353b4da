#include <fstream>
#include <iostream>
#include "exact/exact.hpp"
#include "json.hpp"
using namespace legv::exact;
using nlohmann::json;
int main() {
    std::ifstream in("/tmp/vectors.json");
    json v; in >> v;
    int i = 0;
    for (auto& tc : v["resultant_uni"]) {
        std::vector<BigRat> a, b;
        for (auto& s : tc["A"]) a.emplace_back(BigRat(std::string(s), 10));
        for (auto& s : tc["B"]) b.emplace_back(BigRat(std::string(s), 10));
        ExactPoly A = ExactPoly::from_coeffs(a), B = ExactPoly::from_coeffs(b);
        ExactPoly r = resultant(A, B, 0);
        BigRat expect(tc["res"].get<std::string>(), 10);
        if (!(r.constant_term() == expect)) {
            std::cout << "case " << i << ": degA=" << A.degree(0) << " degB=" << B.degree(0)
                      << " got " << r.constant_term().get_str()
                      << " want " << expect.get_str() << "\n";
            std::cout << "  A = " << A.to_string() << "\n  B = " << B.to_string() << "\n";
        }
        ++i;
    }
    return 0;
}
