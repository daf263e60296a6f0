use super::Polynomial;
use crate::scalar::Scalar;

/// Every product of a subset of `factors` with total degree `degree`, in
/// subset-bitmask order.
pub fn divisors_of_degree<S: Scalar>(
    factors: &[Polynomial<S>],
    degree: usize,
) -> Vec<Polynomial<S>> {
    assert!(factors.len() < 32, "too many factors to enumerate");
    (0u32..1 << factors.len())
        .filter(|mask| {
            factors
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, f)| f.degree())
                .sum::<usize>()
                == degree
        })
        .map(|mask| {
            Polynomial::product(
                factors
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask & (1 << k) != 0)
                    .map(|(_, f)| f),
            )
        })
        .collect()
}

/// All degree-6 monic divisors built from pairwise coprime factors.
pub fn divisors_degree6<S: Scalar>(factors: &[Polynomial<S>]) -> Vec<Polynomial<S>> {
    divisors_of_degree(factors, 6)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;
    use num_rational::BigRational;

    fn ints(c: &[i64]) -> Polynomial<BigRational> {
        Polynomial::new(c.iter().map(|&x| ratio(x, 1)).collect()).unwrap()
    }

    fn factors() -> Vec<Polynomial<BigRational>> {
        vec![
            ints(&[1, 1, 1]),
            ints(&[2, -1, 1]),
            ints(&[1, 0, 1]),
            ints(&[-1, 1]),
            ints(&[1, 1]),
        ]
    }

    #[test]
    fn four_divisors_of_degree_six() {
        let divs = divisors_degree6(&factors());
        // subsets with degree sum 6: {q1,q2,q3} and any two quadratics with both linears
        let by_hand = 1 + 3;
        assert_eq!(divs.len(), by_hand);
        assert!(divs.contains(&ints(&[2, 1, 4, 1, 3, 0, 1])));
        assert!(divs.contains(&ints(&[-1, -1, -1, 0, 1, 1, 1])));
    }

    #[test]
    fn too_small_product_has_no_divisors() {
        assert!(divisors_degree6(&[ints(&[1, 0, 1])]).is_empty());
    }
}
