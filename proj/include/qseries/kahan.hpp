// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qseries/scalar.hpp"

namespace qseries {

/// Neumaier-compensated accumulator applied componentwise to a complex sum.
/// Error-free transformation of each addition; the carry is folded in once
/// at read time.
template <class R>
class CompensatedSum {
  public:
    void add(const cplx<R>& z) {
        add_one(re_, cre_, z.real());
        add_one(im_, cim_, z.imag());
    }

    cplx<R> value() const { return cplx<R>(re_ + cre_, im_ + cim_); }

  private:
    static void add_one(R& acc, R& carry, R elem) {
        using T = real_traits<R>;
        R tmp = acc + elem;
        if (T::abs(acc) >= T::abs(elem))
            carry += (acc - tmp) + elem;
        else
            carry += (elem - tmp) + acc;
        acc = tmp;
    }

    R re_{0}, cre_{0};
    R im_{0}, cim_{0};
};

}  // namespace qseries
