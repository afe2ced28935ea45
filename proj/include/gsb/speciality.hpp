#pragma once

// Speciality of Lie algebras over k[Y | R]: the k[Y]-monic sufficient
// criterion and non-speciality witnesses (x != 0 in L but x = 0 in U(L)).

#include "gsb/gsb_assoc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gsb {

enum class Verdict { special_certified, non_special_witnessed, inconclusive };
std::string to_string(Verdict v);

struct SpecialityReport {
    Verdict verdict = Verdict::inconclusive;
    Caps caps;
    /// No composition was discarded on either side, so nothing depends on the caps.
    bool exact = false;
    std::vector<std::string> reasons;

    std::size_t lie_basis_size = 0, assoc_basis_size = 0;
    std::size_t lie_discarded = 0, assoc_discarded = 0;
    std::size_t irr_checked = 0;  ///< Lie Irr monomials tested for injectivity

    std::optional<LieElement> witness;
    std::optional<LieElement> nf_lie;
    std::optional<AssocElement> nf_assoc;
    std::optional<ReductionTrace> lie_trace;
    std::optional<AssocReduction> assoc_trace;
};

struct SpecialityOptions {
    unsigned threads = 1;
};

/// Special-certified when R is a Groebner basis (after completion), the
/// capped completion of S u RX keeps every non-RX element k[Y]-monic, and
/// every capped Irr monomial stays irreducible on the associative side.
SpecialityReport check_speciality_criterion(const LiePresentation& p, const Caps& caps,
                                            const SpecialityOptions& opts = {});

/// Completes both sides at the caps and reduces the witness on each.
/// Throws CapsExceeded if the witness is outside the caps.
SpecialityReport nonspeciality_witness(const LiePresentation& p, const LieElement& witness, const Caps& caps,
                                       const SpecialityOptions& opts = {});

/// An element of the form r x with r in k[Y] and x a generator.
bool is_rx_element(const LieElement& e);

}  // namespace gsb
