use serde::Serialize;

use crate::domino::Partition;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TwoQuotient {
    pub lambda_star: Vec<usize>,
    pub w: Vec<usize>,
    pub mu: Partition,
    pub nu: Partition,
    /// `μ_p ≥ p` and `ν_q ≥ q`.
    pub valid: bool,
}

pub fn two_quotient(shape: &Partition) -> TwoQuotient {
    let k = shape.len();
    let lambda_star: Vec<usize> = shape
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + k - (i + 1))
        .collect();
    let mut w = vec![0; k];
    let (mut next_odd, mut next_even) = (1, 0);
    for idx in (0..k).rev() {
        if lambda_star[idx] % 2 == 1 {
            w[idx] = next_odd;
            next_odd += 2;
        } else {
            w[idx] = next_even;
            next_even += 2;
        }
    }
    let half = |parity: usize| {
        Partition::from_unsorted(
            lambda_star
                .iter()
                .zip(&w)
                .filter(|(&l, _)| l % 2 == parity)
                .map(|(&l, &x)| (l - x) / 2)
                .collect(),
        )
    };
    let (mu, nu) = (half(0), half(1));
    let last_ok = |p: &Partition| p.parts().last().is_none_or(|&x| x >= p.len());
    let valid = last_ok(&mu) && last_ok(&nu);
    TwoQuotient {
        lambda_star,
        w,
        mu,
        nu,
        valid,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts).unwrap()
    }

    #[test]
    fn worked_example() {
        let q = two_quotient(&p(&[7, 7, 6, 5, 1]));
        assert_eq!(q.lambda_star, vec![11, 10, 8, 6, 1]);
        assert_eq!(q.w, vec![3, 4, 2, 0, 1]);
        assert_eq!(q.mu, p(&[3, 3, 3]));
        assert_eq!(q.nu, p(&[4]));
        assert!(q.valid);
    }

    #[test]
    fn small_cases() {
        let q = two_quotient(&p(&[2]));
        assert_eq!(
            (q.mu.parts(), q.nu.parts(), q.valid),
            (&[1][..], &[][..], true)
        );
        let q = two_quotient(&p(&[2, 2]));
        assert_eq!(
            (q.lambda_star.clone(), q.w.clone()),
            (vec![3, 2], vec![1, 0])
        );
        assert_eq!((q.mu.parts(), q.nu.parts()), (&[1][..], &[1][..]));
    }

    #[test]
    fn quotient_sizes_add_up() {
        // |λ| = 2(|μ| + |ν|) + |2-core|; the 2-core is a staircase.
        for size in 1..=10 {
            for shape in Partition::all(size) {
                let q = two_quotient(&shape);
                let core = size - 2 * (q.mu.size() + q.nu.size());
                let mut t = 0;
                while t * (t + 1) / 2 < core {
                    t += 1;
                }
                assert_eq!(t * (t + 1) / 2, core, "{shape}");
            }
        }
    }
}
