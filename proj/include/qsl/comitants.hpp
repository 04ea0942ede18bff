#ifndef QSL_COMITANTS_HPP
#define QSL_COMITANTS_HPP

#include <map>
#include <string>
#include <vector>

#include "qsl/system.hpp"

namespace qsl {

enum class SignVerdict { Positive, Negative, Zero, Indefinite };
std::string sign_str(SignVerdict v);

// degree in the coefficient tuple, degree in (x,y), weight, and the variety
// on which translation invariance holds ("always" for plain T-comitants).
struct ComitantMeta {
    int deg_a, deg_xy, weight;
    std::string validity;
    bool tabulated;  // appears in the degree/weight table
};

const std::vector<std::string>& comitant_names();
const ComitantMeta& comitant_meta(const std::string& name);

struct ComitantValue {
    std::string name;
    MPoly value;
    int deg_a, deg_xy, weight;
    std::string validity;
};

// base polynomials C0,C1,C2 and D1,D2
MPoly base_C(const SysPair& sp, int i);
MPoly base_D(const SysPair& sp, int i);

// the two determinant comitants of the pencil alpha*P + beta*Q
void dh_comitants(const SysPair& sp, MPoly& D, MPoly& H);

// any named comitant, on a plain system or a symbolic family
MPoly named_comitant_value(const SysPair& sp, const std::string& name);
ComitantValue named_comitant(const QuadraticSystem& s, const std::string& name);

// sign of a binary form of even degree (or a constant); exact
SignVerdict form_sign(const MPoly& value, int xv, int yv);
SignVerdict form_sign(const ComitantValue& c);

struct MetadataReport {
    bool deg_a_ok = false, deg_xy_ok = false, weight_ok = false;
    std::string detail;
    bool pass() const { return deg_a_ok && deg_xy_ok && weight_ok; }
};
MetadataReport metadata_check(const QuadraticSystem& s, const std::string& name,
                              unsigned seed = 1);

// Lazy per-system cache used by the classifier.
class ComitantCache {
public:
    explicit ComitantCache(const QuadraticSystem& s) : sp_(to_pair(s)) {}
    explicit ComitantCache(SysPair sp) : sp_(std::move(sp)) {}
    const MPoly& get(const std::string& name);
    const SysPair& sys() const { return sp_; }

private:
    SysPair sp_;
    std::map<std::string, MPoly> cache_;
};

} // namespace qsl

#endif
