#pragma once

// The convolution algebra B = Hom(H, A) = A (x) H* of a finite-dimensional
// action, with the maps iota, del, u*, Phi, Psi and the two H-actions.
//
// An element b is stored by its values: coordinate q * dimH + p is the a_q
// coefficient of b(h_p).  This is the A-major order of the tensor basis
// a_q (x) f_p, so B coincides with tensor_algebra_prod(A, H*).

#include "hopfact/action.hpp"
#include "hopfact/enumerate.hpp"

namespace hopfact {

class ConvolutionAlgebra {
  public:
	explicit ConvolutionAlgebra(ModuleAlgebraAction act);

	const ModuleAlgebraAction &action() const { return act_; }
	const HopfAlgebra &hopf() const { return act_.hopf(); }
	const FiniteAlgebra &base() const { return act_.algebra(); }
	const HopfAlgebra &dual() const { return dual_; }
	const FiniteAlgebra &algebra() const { return b_; }
	const Field &field() const { return b_.field(); }
	std::size_t dim() const { return b_.dim(); }
	std::size_t index(std::size_t q, std::size_t p) const { return q * hopf().dim() + p; }

	/// (f * g)(h) = f(h_1) g(h_2), straight from the definition.
	Vec convolve(const Vec &x, const Vec &y) const;
	/// dimA x dimH matrix of values b(h_p).
	Matrix values(const Vec &b) const;
	Vec from_values(const Matrix &v) const;

	Vec iota(const Vec &a) const;
	Vec del(const Vec &a) const;
	Vec ustar(const Vec &f) const;
	Vec pure_tensor(const Vec &a, const Vec &f) const;
	Vec phi(const Vec &b) const { return phi_.apply(b); }
	Vec psi(const Vec &b) const { return psi_.apply(b); }
	Vec rh_act(std::size_t i, const Vec &b) const { return rh_[i].apply(b); }
	Vec dot_act(std::size_t i, const Vec &b) const { return dot_[i].apply(b); }

	const Matrix &phi_matrix() const { return phi_; }
	const Matrix &psi_matrix() const { return psi_; }
	Matrix iota_matrix() const;
	Matrix del_matrix() const;
	const std::vector<Matrix> &rh_ops() const { return rh_; }
	const std::vector<Matrix> &dot_ops() const { return dot_; }

	/// (B, hit action) and (B, dot action) as H-actions on the algebra B.
	ModuleAlgebraAction rh_action() const;
	ModuleAlgebraAction dot_action() const;

	Subspace iota_image() const;
	/// W (x) H* for a subspace W of A.
	Subspace tensor_with_dual(const Subspace &w) const;

  private:
	ModuleAlgebraAction act_;
	HopfAlgebra dual_;
	FiniteAlgebra b_;
	Matrix phi_, psi_;
	std::vector<Matrix> rh_, dot_;
};

struct CheckResult {
	CheckResult() = default;
	explicit CheckResult(std::string name) : check(std::move(name)) {}
	std::string check;
	bool passed = true;
	std::vector<std::string> witnesses;
	void fail(std::string w)
	{
		passed = false;
		if (witnesses.size() < 20)
			witnesses.push_back(std::move(w));
	}
};

/// Associativity, unit, iota/del/u* multiplicativity, Phi/Psi inverse pair,
/// Phi iota = del, Phi(1) = 1, right H*-linearity, both intertwining identities
/// and their Psi forms, hit-action measuring, dot-action module axioms and
/// the hit-action invariants.  One CheckResult per identity.
std::vector<CheckResult> check_identities(const ConvolutionAlgebra &b);
/// Only the two intertwining identities and their Psi forms.
std::vector<CheckResult> check_intertwining(const ConvolutionAlgebra &b);

struct DotInvResult {
	bool cocommutative = false;
	CheckResult multiplicative{"phi multiplicative"};
	CheckResult dot_invariants{"dot invariants equal psi(iota A)"};
	CheckResult hit_invariants{"hit invariants equal iota A"};
	CheckResult dot_measuring{"dot action measures"};
};
DotInvResult check_dotinv(const ConvolutionAlgebra &b);

// ---- ideal correspondence --------------------------------------------------

/// Two-sided ideal test by basis multiplication.
bool is_two_sided_ideal(const FiniteAlgebra &a, const Subspace &s);
/// Psi(I (x) H*).
Subspace ideal_transport(const ConvolutionAlgebra &b, const Subspace &ideal);
/// iota^{-1}(Phi(J) cap iota A).
Subspace ideal_restrict(const ConvolutionAlgebra &b, const Subspace &j);
/// J cap Psi(iota A).
Subspace invariant_contract(const ConvolutionAlgebra &b, const Subspace &j);
/// K B for K inside Psi(iota A).
Subspace invariant_extend(const ConvolutionAlgebra &b, const Subspace &k);

struct DotInvCorrespondence {
	std::size_t ideals_of_a = 0;
	std::size_t h_ideals_of_b = 0;
	std::size_t ideals_of_invariants = 0;
	CheckResult transport{"transport lands on the H-ideals of B bijectively"};
	CheckResult restrict_inverse{"restriction inverts transport"};
	CheckResult contract{"contraction lands on the ideals of the invariants bijectively"};
	CheckResult extend_inverse{"extension inverts contraction"};
	bool passed() const
	{
		return transport.passed && restrict_inverse.passed && contract.passed && extend_inverse.passed;
	}
};
/// Enumerates all three ideal lattices over F_p and compares them with the maps.
DotInvCorrespondence check_dotinv_correspondence(const ConvolutionAlgebra &b,
                                                 std::uint64_t bound = default_enumeration_bound());

struct StabilityScan {
	std::size_t stable_found = 0;
	std::size_t expected = 0; // number of subspaces of A
	CheckResult result{"stable subspaces are exactly W (x) H*"};
	CheckResult phi_psi{"phi and psi preserve W (x) H* for H-stable W"};
};
StabilityScan stability_scan(const ConvolutionAlgebra &b, std::uint64_t bound = default_enumeration_bound());

/// Gaussian binomial sum: number of subspaces of F_q^n.
std::uint64_t subspace_count(std::uint64_t q, std::size_t n);

} // namespace hopfact
