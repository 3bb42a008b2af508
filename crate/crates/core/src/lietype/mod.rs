//! Order arithmetic for finite groups of Lie type.
//!
//! Orders are exponent data, so whether a Zsigmondy prime for `(q, e)`
//! divides an order is read off from which factors `q^b - 1` have `e | b`.

pub mod gl;
pub mod order;
pub mod table;
pub mod zsigmondy;

pub use gl::{gl_parabolic_order, lemma6_certificate, mersenne_borel_check, F2Matrix};
pub use order::OrderPolynomial;
pub use table::{
    center_order, exception_scan, group_order, maximal_parabolic_orders, order_polynomial, verify_table2_row,
    zsigmondy_exponent, ExceptionCase, LieFamily, LieTable, Parabolic,
};
pub use zsigmondy::{has_zsigmondy_prime, zsigmondy_primes, ZsigmondyPrimes};
