#pragma once

#include "ring/qseries.hpp"

namespace refsev {

// Named q-series. Every constructor takes a truncation K: the result knows its
// coefficients for q-powers (relative to its fractional offset) below K.

Rational bernoulli(int n);

QSeries eisenstein(int weight, int k);      // G_w, w even >= 2
QSeries eisenstein_bar(int weight, int k);  // G_w(q) - G_w(q^2)
QSeries eta(int k);                         // q^(1/24) prod (1 - q^n)
QSeries discriminant(int k);                // eta^24
QSeries theta2_q2(int k);                   // sum (-1)^n q^(n^2) = eta(q)^2 / eta(q^2)
QSeries eta_q2_cubed(int k);                // q^(1/4) sum_{n>=0} (-1)^n (2n+1) q^(n(n+1))

// theta(y, q) from its sum form; offset24 = 3.
QSeries theta(int k);
// theta / (q^(1/8) (y^(1/2) - y^(-1/2))) = prod (1-q^n)(1-yq^n)(1-q^n/y).
QSeries theta_normalized(int k);
QSeries theta_normalized_product(int k);

QSeries dg2_tilde(int k);     // sum_m sum_{d|m} (m/d) [d]_y^2 q^m
QSeries ddg2_tilde(int k);    // D of the above
QSeries delta_tilde(int k);   // q prod (1-q^n)^20 (1-yq^n)^2 (1-q^n/y)^2

// f_l via the theta-derivative definition, and f_l / q^(l^2/4).
QSeries f_lower(int l, int k);
QSeries f_bar(int l, int k);
// sum_m (-1)^m (2m+l)/(m+l) C(m+l, l) q^(m(m+l)).
QSeries f_bar_closed_form(int l, int k);

// (y^(1/2) - y^(-1/2))^2 = y - 2 + 1/y.
YLaurent s_squared();

// Divisor-sum forms.
QSeries f0_divisor(int k);  // (y - 2 + 1/y) * DG~2
QSeries f1_divisor(int k);
QSeries f2_divisor(int k);  // sum (n^2/d^2 - n/2)(y^d - y^-d) q^n

// Theta forms; the F2 one is returned multiplied by (y - 2 + 1/y) so that all
// coefficients stay Laurent polynomials.
QSeries f0_theta(int k);
QSeries f1_theta(int k);
QSeries s2_f2_theta(int k);

// Multiple-point correction series.
QSeries h_refined(int m, int k);  // m = 1, 2

// Alternative readings of doubtful tokens in the printed H_m(+-1)
// expressions. kMinusSign, kG8 and kMinusSignG8 concern the two uncertain
// tokens of H_4(1) (the sign before 149 D^2G_6/26880 and the monomial
// D^4G_4/8211456 read as D^4G_8); kFlipD3G2 flips the sign of the D^3G_2
// term of H_3(1) and of H_4(-1). Readings that do not apply to the
// requested (m, y) are ignored.
enum class HReading { kAsPrinted, kMinusSign, kG8, kMinusSignG8, kFlipD3G2 };
QSeries h_at_one(int m, int k, HReading reading = HReading::kAsPrinted);        // m = 1..4
QSeries h_at_minus_one(int m, int k, HReading reading = HReading::kAsPrinted);  // m = 1..4

// Correction factor for the 1/m(1,1) point of P(1,1,m): m = 2 exactly,
// m = 3, 4 from embedded tables.
QSeries fhat_cm(int m, int k);
// The general-m low-order expansion, valid mod q^4.
QSeries fhat_cm_general(int m);

// Coefficientwise specialization at y = 1 or y = -1.
QSeries at_y(const QSeries& s, int y);

}  // namespace refsev
