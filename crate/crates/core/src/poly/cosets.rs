use serde::Serialize;

use crate::arith::{gcd, is_prime, mul_mod};
use crate::error::{Error, Result};

/// Orbits of `Z_N` under multiplication by `b`, each sorted, ordered by least element.
pub fn cyclotomic_cosets(n: u64, b: u64) -> Result<Vec<Vec<u64>>> {
    if n == 0 {
        return Err(Error::ParameterInvalid("N must be positive".into()));
    }
    if gcd(n, b % n.max(1)) != 1 && n > 1 {
        return Err(Error::NonCoprime(n, b));
    }
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start as usize] {
            continue;
        }
        let mut coset = Vec::new();
        let mut cur = start;
        while !seen[cur as usize] {
            seen[cur as usize] = true;
            coset.push(cur);
            cur = mul_mod(cur, b, n);
        }
        coset.sort_unstable();
        out.push(coset);
    }
    Ok(out)
}

/// The `p`- and `p^r`-cyclotomic cosets modulo `N` with the leader bookkeeping
/// of the idempotent decomposition.
///
/// Leaders `j_0 = 0, ..., j_u` index the cosets that stay whole under `p^r`
/// (`gcd(κ, r) = 1`), in ascending order; `j_{u+1}, ..., j_v` index those that
/// split into `r` cosets `C_{j p^h}^{(p^r)}`, also ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetClassification {
    #[serde(rename = "N")]
    pub n: u64,
    pub p: u64,
    pub r: u32,
    pub cosets_p: Vec<Vec<u64>>,
    pub cosets_pr: Vec<Vec<u64>>,
    pub leaders: Vec<u64>,
    pub u: usize,
    pub v: usize,
    /// `κ_{j_i} = |C_{j_i}^{(p)}|`.
    pub kappa: Vec<usize>,
    /// For split leaders, the cosets `C_{j_i p^h}^{(p^r)}`, `h < r`; empty for `i <= u`.
    pub split: Vec<Vec<Vec<u64>>>,
}

impl CosetClassification {
    /// The `p`-coset of leader `i`.
    pub fn coset(&self, i: usize) -> &[u64] {
        let j = self.leaders[i];
        self.cosets_p.iter().find(|c| c.contains(&j)).expect("leader lies in a coset")
    }

    pub fn is_split(&self, i: usize) -> bool {
        i > self.u
    }

    /// `κ_{j_i, h} = |C_{j_i p^h}^{(p^r)}|`.
    pub fn kappa_split(&self, i: usize, h: usize) -> usize {
        self.split[i][h].len()
    }

    /// Index of the leader whose `p`-coset contains `j`.
    pub fn coset_index_of(&self, j: u64) -> usize {
        let j = j % self.n;
        (0..self.leaders.len()).find(|&i| self.coset(i).contains(&j)).expect("cosets cover Z_N")
    }
}

pub fn classify_cosets(n: u64, p: u64, r: u32) -> Result<CosetClassification> {
    if r != 1 && !is_prime(r as u64) {
        return Err(Error::RNotPrime(r));
    }
    if n > 1 && gcd(n, p) != 1 {
        return Err(Error::NonCoprime(n, p));
    }
    let cosets_p = cyclotomic_cosets(n, p)?;
    let pr = (0..r).fold(1u64, |acc, _| mul_mod(acc, p, n.max(1)));
    let cosets_pr = cyclotomic_cosets(n, pr)?;
    let (mut whole, mut splitting) = (Vec::new(), Vec::new());
    for c in &cosets_p {
        let kappa = c.len();
        if gcd(kappa as u64, r as u64) == 1 {
            whole.push(c[0]);
        } else {
            splitting.push(c[0]);
        }
    }
    let u = whole.len() - 1;
    let leaders: Vec<u64> = whole.into_iter().chain(splitting).collect();
    let v = leaders.len() - 1;
    let mut kappa = Vec::with_capacity(leaders.len());
    let mut split = Vec::with_capacity(leaders.len());
    for (i, &j) in leaders.iter().enumerate() {
        let c = cosets_p.iter().find(|c| c[0] == j).unwrap();
        kappa.push(c.len());
        if i <= u {
            split.push(Vec::new());
            continue;
        }
        let mut parts = Vec::with_capacity(r as usize);
        let mut jh = j;
        for _ in 0..r {
            let part = cosets_pr.iter().find(|c| c.contains(&jh)).unwrap().clone();
            parts.push(part);
            jh = mul_mod(jh, p, n);
        }
        split.push(parts);
    }
    Ok(CosetClassification { n, p, r, cosets_p, cosets_pr, leaders, u, v, kappa, split })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coset_examples() {
        assert_eq!(cyclotomic_cosets(3, 2).unwrap(), vec![vec![0], vec![1, 2]]);
        assert_eq!(cyclotomic_cosets(3, 4).unwrap(), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(cyclotomic_cosets(1, 5).unwrap(), vec![vec![0]]);
        assert_eq!(cyclotomic_cosets(4, 2), Err(Error::NonCoprime(4, 2)));
    }

    #[test]
    fn classification_examples() {
        let c = classify_cosets(3, 2, 2).unwrap();
        assert_eq!((c.u, c.v), (0, 1));
        assert_eq!(c.kappa, vec![1, 2]);
        assert_eq!((c.kappa_split(1, 0), c.kappa_split(1, 1)), (1, 1));
        assert_eq!(c.split[1], vec![vec![1], vec![2]]);

        let c = classify_cosets(3, 2, 1).unwrap();
        assert_eq!((c.u, c.v), (1, 1));
        assert_eq!(c.cosets_p, vec![vec![0], vec![1, 2]]);

        let c = classify_cosets(7, 2, 3).unwrap();
        assert_eq!((c.u, c.v), (0, 2));
        assert_eq!(c.leaders, vec![0, 1, 3]);
        assert_eq!(c.kappa, vec![1, 3, 3]);
        assert_eq!(c.split[2], vec![vec![3], vec![6], vec![5]]);

        assert_eq!(classify_cosets(3, 2, 4), Err(Error::RNotPrime(4)));
        assert_eq!(classify_cosets(6, 3, 1), Err(Error::NonCoprime(6, 3)));
    }

    #[test]
    fn split_and_whole_leaders_are_regrouped() {
        // N = 21, p = 2, r = 3: cosets {0}, {1,2,4,8,16,11}, {3,6,12}, {5,10,20,19,17,13}, {7,14}, {9,18,15}
        let c = classify_cosets(21, 2, 3).unwrap();
        assert_eq!(c.leaders, vec![0, 7, 1, 3, 5, 9]);
        assert_eq!(c.u, 1);
        for i in c.u + 1..=c.v {
            assert_eq!(c.kappa[i] % 3, 0);
            let mut union: Vec<u64> = c.split[i].concat();
            union.sort_unstable();
            assert_eq!(union, c.coset(i));
        }
    }
}
