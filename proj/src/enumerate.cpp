#include "hopfact/enumerate.hpp"

#include <cstdlib>
#include <string>

namespace hopfact {

std::uint64_t default_enumeration_bound()
{
	if (const char *env = std::getenv("HOPFACT_ENUM_BOUND")) {
		try {
			return std::stoull(env);
		} catch (const std::exception &) {
			throw Error(std::string("HOPFACT_ENUM_BOUND is not a number: ") + env);
		}
	}
	return 729;
}

namespace {

std::uint64_t checked_power(const Field &f, std::size_t n, std::uint64_t bound)
{
	if (!f.is_prime_field())
		throw Error("subspace enumeration requires a prime field, got " + f.name());
	if (f.p() > 255)
		throw Error("subspace enumeration supports p < 256 only");
	std::uint64_t total = 1;
	for (std::size_t i = 0; i < n; ++i) {
		total *= static_cast<std::uint64_t>(f.p());
		if (total > bound)
			throw Error("enumeration bound exceeded: " + f.name() + "^" + std::to_string(n) +
			            " > " + std::to_string(bound));
	}
	return total;
}

} // namespace

ModpMap::ModpMap(const Matrix &m) : rows_(m.rows()), cols_(m.cols()), data_(m.rows() * m.cols())
{
	if (!m.field().is_prime_field())
		throw Error("ModpMap requires a prime field");
	p_ = static_cast<unsigned>(m.field().p());
	for (std::size_t r = 0; r < rows_; ++r)
		for (std::size_t c = 0; c < cols_; ++c)
			data_[r * cols_ + c] = static_cast<std::uint8_t>(m(r, c).get_num().get_ui());
}

void ModpMap::apply(const std::uint8_t *v, std::uint8_t *out) const
{
	for (std::size_t r = 0; r < rows_; ++r) {
		unsigned acc = 0;
		const std::uint8_t *row = &data_[r * cols_];
		for (std::size_t c = 0; c < cols_; ++c)
			acc += static_cast<unsigned>(row[c]) * v[c];
		out[r] = static_cast<std::uint8_t>(acc % p_);
	}
}

bool ModpSubspace::contains(const std::uint8_t *v) const
{
	scratch_.assign(v, v + n_);
	for (std::size_t k = 0; k < pivots_.size(); ++k) {
		unsigned c = scratch_[pivots_[k]];
		if (c == 0)
			continue;
		const std::uint8_t *r = row(k);
		for (std::size_t j = pivots_[k]; j < n_; ++j)
			scratch_[j] = static_cast<std::uint8_t>((scratch_[j] + (p_ - c) * r[j]) % p_);
	}
	for (auto x : scratch_)
		if (x)
			return false;
	return true;
}

bool ModpSubspace::stable_under(const std::vector<ModpMap> &maps) const
{
	image_.resize(n_);
	for (const auto &m : maps)
		for (std::size_t k = 0; k < pivots_.size(); ++k) {
			m.apply(row(k), image_.data());
			if (!contains(image_.data()))
				return false;
		}
	return true;
}

Subspace ModpSubspace::to_subspace(const Field &f) const
{
	Matrix m(f, pivots_.size(), n_);
	for (std::size_t k = 0; k < pivots_.size(); ++k)
		for (std::size_t j = 0; j < n_; ++j)
			m(k, j) = row(k)[j];
	return Subspace::row_space(m);
}

class SubspaceWalker {
  public:
	SubspaceWalker(unsigned p, std::size_t n, const std::function<void(const ModpSubspace &)> &visit)
	    : s_(p, n), visit_(visit)
	{
	}

	void run()
	{
		const std::size_t n = s_.n_;
		for (std::size_t k = 0; k <= n; ++k) {
			s_.pivots_.assign(k, 0);
			choose(0, 0, k);
		}
	}

  private:
	// choose pivot columns in increasing order
	void choose(std::size_t idx, std::size_t start, std::size_t k)
	{
		if (idx == k) {
			fill_free();
			return;
		}
		for (std::size_t c = start; c + (k - idx) <= s_.n_; ++c) {
			s_.pivots_[idx] = c;
			choose(idx + 1, c + 1, k);
		}
	}

	void fill_free()
	{
		const std::size_t n = s_.n_;
		const std::size_t k = s_.pivots_.size();
		s_.rows_.assign(k * n, 0);
		std::vector<bool> is_pivot(n, false);
		for (auto c : s_.pivots_)
			is_pivot[c] = true;
		free_.clear();
		for (std::size_t r = 0; r < k; ++r) {
			s_.rows_[r * n + s_.pivots_[r]] = 1;
			for (std::size_t c = s_.pivots_[r] + 1; c < n; ++c)
				if (!is_pivot[c])
					free_.push_back(r * n + c);
		}
		// odometer over the free entries
		for (;;) {
			visit_(s_);
			std::size_t i = 0;
			while (i < free_.size()) {
				auto &cell = s_.rows_[free_[i]];
				if (++cell < s_.p_)
					break;
				cell = 0;
				++i;
			}
			if (i == free_.size())
				break;
		}
	}

	ModpSubspace s_;
	const std::function<void(const ModpSubspace &)> &visit_;
	std::vector<std::size_t> free_;
};

void for_each_subspace(const Field &f, std::size_t n,
                       const std::function<void(const ModpSubspace &)> &visit, std::uint64_t bound)
{
	checked_power(f, n, bound);
	SubspaceWalker walker(static_cast<unsigned>(f.p()), n, visit);
	walker.run();
}

std::vector<Subspace> enumerate_subspaces(const Field &f, std::size_t n, std::uint64_t bound)
{
	std::vector<Subspace> out;
	for_each_subspace(f, n, [&](const ModpSubspace &s) { out.push_back(s.to_subspace(f)); }, bound);
	return out;
}

std::vector<Subspace> enumerate_stable_subspaces(const Field &f, std::size_t n,
                                                 const std::vector<Matrix> &maps, std::uint64_t bound)
{
	std::vector<ModpMap> small;
	small.reserve(maps.size());
	for (const auto &m : maps) {
		if (m.rows() != n || m.cols() != n)
			throw Error("stable-subspace enumeration expects square maps on the ambient space");
		small.emplace_back(m);
	}
	std::vector<Subspace> out;
	for_each_subspace(
	    f, n,
	    [&](const ModpSubspace &s) {
		    if (s.stable_under(small))
			    out.push_back(s.to_subspace(f));
	    },
	    bound);
	return out;
}

void for_each_vector(const Field &f, std::size_t n, const std::function<void(const Vec &)> &visit,
                     std::uint64_t bound)
{
	checked_power(f, n, bound);
	Vec v(n);
	for (;;) {
		visit(v);
		std::size_t i = 0;
		while (i < n) {
			v[i] += 1;
			if (v[i] < f.p())
				break;
			v[i] = 0;
			++i;
		}
		if (i == n)
			break;
	}
}

} // namespace hopfact
