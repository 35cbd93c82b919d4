#include "agstab/molien.hpp"

#include "agstab/error.hpp"

namespace agstab {

LinearAction LinearAction::permutation(PermGroup group) {
  const std::size_t r = group.degree();
  if (r == 0)
    throw InputError("permutation action needs at least one point");
  return LinearAction(std::move(group), r);
}

LinearAction LinearAction::matrices(PermGroup group, std::size_t dimension,
                                    const std::function<RationalMatrix(const Permutation &)> &rho) {
  LinearAction a(std::move(group), dimension);
  const auto &elems = a.group_.elements();
  a.matrices_.reserve(elems.size());
  for (const auto &e : elems) {
    RationalMatrix m = rho(e);
    if (m.size() != dimension)
      throw InputError("representation matrix has the wrong size");
    if (m.determinant() == 0)
      throw InputError("representation matrix of " + e.to_cycle_string() + " is singular");
    a.matrices_.push_back(std::move(m));
  }
  if (!(a.matrices_.front() == RationalMatrix::identity(dimension)))
    throw InputError("representation does not send the identity to 1");
  const auto &gens = a.group_.generators();
  for (const auto &g : gens)
    for (const auto &h : gens) {
      const auto &mg = a.matrices_[a.group_.index_of(g)];
      const auto &mh = a.matrices_[a.group_.index_of(h)];
      if (!(mg * mh == a.matrices_[a.group_.index_of(g * h)]))
        throw InputError("representation is not a homomorphism on generators " +
                         g.to_cycle_string() + ", " + h.to_cycle_string());
    }
  return a;
}

RationalMatrix LinearAction::matrix(std::size_t element_index) const {
  if (is_permutation())
    return RationalMatrix::permutation(group_.elements().at(element_index).image_vector());
  return matrices_.at(element_index);
}

namespace {

TruncatedSeries matrix_term(const RationalMatrix &m, std::size_t order) {
  return series_inverse(det_one_minus_tA(m, order));
}

} // namespace

TruncatedSeries molien_series(const LinearAction &action, std::size_t order,
                              const MolienOptions &opts) {
  const PermGroup &g = action.group();
  const auto &classes = g.classes();
  const bool cycle_path = action.is_permutation() && opts.use_cycle_types;
  std::vector<TruncatedSeries> terms(classes.size());

  const auto n = static_cast<long>(classes.size());
#pragma omp parallel for schedule(dynamic) if (opts.parallel && n > 1)
  for (long c = 0; c < n; ++c) {
    const auto &cls = classes[static_cast<std::size_t>(c)];
    TruncatedSeries term = cycle_path
                               ? inverse_cycle_product(cls.type.parts, order)
                               : matrix_term(action.matrix(g.index_of(cls.representative)), order);
    term *= Rational(static_cast<long>(cls.size));
    terms[static_cast<std::size_t>(c)] = std::move(term);
  }

  // deterministic fold in class order
  TruncatedSeries sum(order);
  for (const auto &t : terms)
    sum += t;
  sum *= Rational(1, static_cast<long>(g.order()));
  return sum;
}

TruncatedSeries molien_series_naive(const LinearAction &action, std::size_t order) {
  const PermGroup &g = action.group();
  if (g.order() > kNaiveMolienCap)
    throw CapExceeded("naive Molien sum limited to " + std::to_string(kNaiveMolienCap) +
                      " elements, group has " + std::to_string(g.order()));
  TruncatedSeries sum(order);
  for (std::size_t i = 0; i < g.order(); ++i)
    sum += matrix_term(action.matrix(i), order);
  sum *= Rational(1, static_cast<long>(g.order()));
  return sum;
}

} // namespace agstab
