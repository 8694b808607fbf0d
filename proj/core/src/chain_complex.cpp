#include "nmsh/chain_complex.hpp"

#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include "nmsh/smith.hpp"

namespace nmsh {

namespace {

std::vector<std::vector<std::string>> default_labels(const std::vector<std::size_t>& ranks)
{
    std::vector<std::vector<std::string>> labels(ranks.size());
    for (std::size_t k = 0; k < ranks.size(); ++k) {
        for (std::size_t i = 0; i < ranks[k]; ++i) labels[k].push_back("e" + std::to_string(k) + "." + std::to_string(i));
    }
    return labels;
}

} // namespace

std::string BoundaryReport::describe() const
{
    if (valid()) return "boundary condition holds";
    std::ostringstream os;
    for (const auto& v : violations) {
        os << "d_" << v.degree << " * d_" << v.degree + 1 << " = " << v.product << " is nonzero\n";
        for (const auto& d : v.defects) {
            os << "  " << d.upper << " -> " << d.lower << ": " << d.value << '\n';
        }
    }
    return os.str();
}

BoundaryError::BoundaryError(BoundaryReport report)
    : std::runtime_error("boundary maps do not compose to zero:\n" + report.describe()), report_(std::move(report))
{
}

ChainComplex::ChainComplex(std::vector<std::size_t> ranks, std::vector<IntegerMatrix> boundaries,
                           std::vector<std::vector<std::string>> labels)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries)), labels_(std::move(labels))
{
    if (ranks_.empty()) throw std::invalid_argument("chain complex needs at least degree 0");
    if (boundaries_.size() != ranks_.size() - 1) {
        throw std::invalid_argument("expected " + std::to_string(ranks_.size() - 1) + " boundary maps, got "
                                    + std::to_string(boundaries_.size()));
    }
    for (std::size_t k = 1; k < ranks_.size(); ++k) {
        const auto& d = boundaries_[k - 1];
        if (d.rows() != ranks_[k - 1] || d.cols() != ranks_[k]) {
            throw ShapeError("d_" + std::to_string(k) + " has shape " + std::to_string(d.rows()) + "x"
                             + std::to_string(d.cols()) + ", expected " + std::to_string(ranks_[k - 1]) + "x"
                             + std::to_string(ranks_[k]));
        }
    }

    if (labels_.empty()) {
        labels_ = default_labels(ranks_);
        return;
    }
    if (labels_.size() != ranks_.size()) throw std::invalid_argument("label lists do not cover every degree");
    for (std::size_t k = 0; k < ranks_.size(); ++k) {
        if (labels_[k].size() != ranks_[k]) {
            throw std::invalid_argument("degree " + std::to_string(k) + " has " + std::to_string(ranks_[k])
                                        + " generators but " + std::to_string(labels_[k].size()) + " labels");
        }
        std::set<std::string> seen(labels_[k].begin(), labels_[k].end());
        if (seen.size() != labels_[k].size()) {
            throw std::invalid_argument("duplicate generator label in degree " + std::to_string(k));
        }
    }
}

ChainComplex ChainComplex::free(std::vector<std::size_t> ranks)
{
    std::vector<IntegerMatrix> boundaries;
    for (std::size_t k = 1; k < ranks.size(); ++k) boundaries.emplace_back(ranks[k - 1], ranks[k]);
    return ChainComplex(std::move(ranks), std::move(boundaries));
}

IntegerMatrix ChainComplex::boundary(std::size_t degree) const
{
    if (degree == 0) return IntegerMatrix(0, ranks_[0]);
    if (degree == ranks_.size()) return IntegerMatrix(ranks_.back(), 0);
    if (degree > ranks_.size()) throw std::out_of_range("no boundary map in degree " + std::to_string(degree));
    return boundaries_[degree - 1];
}

BoundaryReport check_boundary_condition(const ChainComplex& c)
{
    BoundaryReport report;
    for (std::size_t k = 1; k < c.top_degree(); ++k) {
        IntegerMatrix product = c.boundary(k) * c.boundary(k + 1);
        if (product.is_zero()) continue;

        BoundaryViolation v{k, {}, {}};
        for (std::size_t i = 0; i < product.rows(); ++i) {
            for (std::size_t j = 0; j < product.cols(); ++j) {
                if (sgn(product(i, j)) != 0) {
                    v.defects.push_back({c.labels(k + 1)[j], c.labels(k - 1)[i], product(i, j)});
                }
            }
        }
        v.product = std::move(product);
        report.violations.push_back(std::move(v));
    }
    return report;
}

std::vector<HomologyGroup> homology(const ChainComplex& c)
{
    if (auto report = check_boundary_condition(c); !report.valid()) throw BoundaryError(std::move(report));

    const std::size_t top = c.top_degree();
    // divisors[k] belongs to d_k; the end maps are zero.
    std::vector<std::vector<Integer>> divisors(top + 2);
    for (std::size_t k = 1; k <= top; ++k) divisors[k] = elementary_divisors(c.boundary(k));

    std::vector<HomologyGroup> groups;
    groups.reserve(top + 1);
    for (std::size_t k = 0; k <= top; ++k) {
        HomologyGroup h;
        h.degree = k;
        h.betti = c.rank(k) - divisors[k].size() - divisors[k + 1].size();
        for (const auto& d : divisors[k + 1]) {
            if (d > 1) h.torsion.push_back(d);
        }
        groups.push_back(std::move(h));
    }
    return groups;
}

long long euler_characteristic(const ChainComplex& c)
{
    long long chi = 0;
    for (std::size_t k = 0; k <= c.top_degree(); ++k) {
        const auto r = static_cast<long long>(c.rank(k));
        chi += k % 2 == 0 ? r : -r;
    }
    return chi;
}

std::string format_group(const HomologyGroup& h)
{
    if (h.is_trivial()) return "0";
    std::ostringstream os;
    const char* sep = "";
    if (h.betti == 1) {
        os << "Z";
        sep = " + ";
    } else if (h.betti > 1) {
        os << "Z^" << h.betti;
        sep = " + ";
    }
    for (const auto& t : h.torsion) {
        os << sep << "Z/" << t;
        sep = " + ";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const HomologyGroup& h)
{
    return os << "H_" << h.degree << " = " << format_group(h);
}

} // namespace nmsh
