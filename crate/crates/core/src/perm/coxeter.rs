use serde::Serialize;

/// Which Coxeter group a descriptor stands for.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoxeterKind {
    /// The symmetric group `S_n`, generators `s_1..s_{n-1}`.
    TypeA,
    /// The hyperoctahedral group `B_n`, generators `s_0..s_{n-1}`.
    TypeB,
}

/// Generators and Coxeter matrix of `S_n` or `B_n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct CoxeterDescriptor {
    pub kind: CoxeterKind,
    /// The `n` of `S_n` or `B_n`; entries of windows live in `±[n]`.
    pub n: usize,
}

impl CoxeterDescriptor {
    pub fn type_a(n: usize) -> Self {
        CoxeterDescriptor {
            kind: CoxeterKind::TypeA,
            n,
        }
    }

    pub fn type_b(n: usize) -> Self {
        CoxeterDescriptor {
            kind: CoxeterKind::TypeB,
            n,
        }
    }

    /// Generator indices in increasing order.
    pub fn generators(&self) -> Vec<usize> {
        match self.kind {
            CoxeterKind::TypeA => (1..self.n).collect(),
            CoxeterKind::TypeB => (0..self.n).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.generators().len()
    }

    pub fn is_generator(&self, i: usize) -> bool {
        match self.kind {
            CoxeterKind::TypeA => i >= 1 && i < self.n,
            CoxeterKind::TypeB => i < self.n,
        }
    }

    /// Order of `s_i s_j`.
    pub fn m(&self, i: usize, j: usize) -> usize {
        if i == j {
            return 1;
        }
        let (lo, hi) = (i.min(j), i.max(j));
        match (self.kind, lo, hi - lo) {
            (CoxeterKind::TypeB, 0, 1) => 4,
            (_, _, 1) => 3,
            _ => 2,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coxeter_matrix_values() {
        let b = CoxeterDescriptor::type_b(4);
        assert_eq!(b.generators(), vec![0, 1, 2, 3]);
        assert_eq!(b.m(0, 1), 4);
        assert_eq!(b.m(1, 0), 4);
        assert_eq!(b.m(1, 2), 3);
        assert_eq!(b.m(0, 2), 2);
        assert_eq!(b.m(3, 3), 1);
        let a = CoxeterDescriptor::type_a(4);
        assert_eq!(a.generators(), vec![1, 2, 3]);
        assert_eq!(a.m(1, 2), 3);
        assert_eq!(a.m(1, 3), 2);
        assert!(!a.is_generator(0));
    }

    #[test]
    fn symmetric() {
        let b = CoxeterDescriptor::type_b(5);
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(b.m(i, j), b.m(j, i));
            }
        }
    }
}
