use num_traits::Zero;
use proptest::prelude::*;
use rectilt_core::linalg::{format_rational, parse_rational, q, Mat};
use rectilt_core::Rational;

fn small_matrix(max: usize) -> impl Strategy<Value = Mat> {
    (0..=max, 0..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(-4i64..=4, r * c)
            .prop_map(move |v| Mat::from_vec(r, c, v.into_iter().map(q).collect()))
    })
}

fn is_zero(m: &Mat) -> bool {
    m.entries().iter().all(Rational::is_zero)
}

proptest! {
    #[test]
    fn rank_nullity(m in small_matrix(5)) {
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.cols(), m.cols());
        prop_assert!(is_zero(&(&m * &k)));
        prop_assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn rank_of_transpose(m in small_matrix(5)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn solve_recovers_a_solution(m in small_matrix(4), xs in prop::collection::vec(-3i64..=3, 4)) {
        let x = Mat::from_vec(m.cols(), 1, xs.into_iter().take(m.cols()).map(q).collect());
        let b = &m * &x;
        let y = m.solve(&b).expect("consistent system");
        prop_assert_eq!(&m * &y, b);
    }

    #[test]
    fn quotient_section_splits_projection(m in small_matrix(4)) {
        let quo = Mat::quotient(m.rows(), &m);
        prop_assert_eq!(quo.dim, m.rows() - m.rank());
        prop_assert_eq!(&quo.projection * &quo.section, Mat::identity(quo.dim));
        prop_assert!(is_zero(&(&quo.projection * &m)));
    }

    #[test]
    fn rational_text_round_trip(n in -1000i64..1000, d in 1i64..50) {
        let x = Rational::new(n.into(), d.into());
        prop_assert_eq!(parse_rational(&format_rational(&x)), Some(x));
    }
}

#[test]
fn inverse_of_invertible() {
    let m = Mat::from_i64(&[&[2, 1, 0], &[1, 1, 0], &[0, 3, 1]]);
    let inv = m.inverse().unwrap();
    assert_eq!(&m * &inv, Mat::identity(3));
    assert!(Mat::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
}

#[test]
fn canonical_text() {
    assert_eq!(format_rational(&q(0)), "0");
    assert_eq!(format_rational(&q(7)), "7");
    assert_eq!(
        format_rational(&Rational::new((-6).into(), 4.into())),
        "-3/2"
    );
}
