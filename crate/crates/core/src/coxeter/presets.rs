//! Registry of finite Cartan matrices and their untwisted affine extensions.
//!
//! Labeling follows Bourbaki: `B_n` has `alpha_n` short, `C_n` has `alpha_n`
//! long, `G_2` has `alpha_1` short, `F_4` has `alpha_3, alpha_4` short and
//! `D_4` has node 2 in the center. Affine extensions append the affine node
//! as the last generator.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};

pub const FINITE_PRESETS: &[&str] = &[
    "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4",
];

pub const AFFINE_PREFIX: &str = "affine:";

fn chain(n: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0; n]; n];
    for i in 0..n {
        c[i][i] = 2;
        if i + 1 < n {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
    }
    c
}

/// Cartan matrix `C[i][j] = <alpha_i^vee, alpha_j>` of a finite preset.
pub fn finite_cartan(name: &str) -> Option<Vec<Vec<i64>>> {
    if !FINITE_PRESETS.contains(&name) {
        return None;
    }
    let (family, n) = name.split_at(1);
    let n: usize = n.parse().ok()?;
    let mut c = chain(n);
    match family {
        "A" => {}
        "B" => c[n - 1][n - 2] = -2,
        "C" => c[n - 2][n - 1] = -2,
        "D" => {
            c = vec![vec![0; 4]; 4];
            for (i, row) in c.iter_mut().enumerate() {
                row[i] = 2;
            }
            for leaf in [0, 2, 3] {
                c[1][leaf] = -1;
                c[leaf][1] = -1;
            }
        }
        "G" => c[0][1] = -3,
        "F" => c[2][1] = -2,
        _ => return None,
    }
    Some(c)
}

/// The highest root of a finite root system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HighestRoot {
    /// Coefficients in the simple-root basis.
    pub coeffs: Vec<i64>,
    /// 0-based letters `a_1 .. a_k` with `theta = s_{a_1} ... s_{a_k}(alpha_base)`.
    pub word: Vec<usize>,
    pub base: usize,
    /// `<theta^vee, alpha_j>` for each simple root.
    pub coroot_pairing: Vec<i64>,
}

fn reflect(cartan: &[Vec<i64>], i: usize, v: &[i64]) -> Vec<i64> {
    let pairing: i64 = cartan[i].iter().zip(v).map(|(c, x)| c * x).sum();
    let mut out = v.to_vec();
    out[i] -= pairing;
    out
}

/// Finds the highest root by breadth-first search over positive roots.
pub fn highest_root(cartan: &[Vec<i64>]) -> HighestRoot {
    let n = cartan.len();
    let mut seen: HashMap<Vec<i64>, (Vec<usize>, usize)> = HashMap::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone(), (Vec::new(), i));
        queue.push_back(e);
    }
    while let Some(root) = queue.pop_front() {
        let (word, base) = seen[&root].clone();
        for k in 0..n {
            let image = reflect(cartan, k, &root);
            if image.iter().any(|&x| x < 0) || seen.contains_key(&image) {
                continue;
            }
            let mut w = vec![k];
            w.extend(&word);
            seen.insert(image.clone(), (w, base));
            queue.push_back(image);
        }
    }
    let (coeffs, (word, base)) = seen
        .into_iter()
        .max_by_key(|(r, _)| (r.iter().sum::<i64>(), r.clone()))
        .expect("root system is nonempty");
    // <theta^vee, alpha_j> = <alpha_base^vee, w^-1(alpha_j)>, w^-1 applies word[0] first.
    let coroot_pairing = (0..n)
        .map(|j| {
            let mut v = vec![0; n];
            v[j] = 1;
            for &a in &word {
                v = reflect(cartan, a, &v);
            }
            cartan[base].iter().zip(&v).map(|(c, x)| c * x).sum()
        })
        .collect();
    HighestRoot {
        coeffs,
        word,
        base,
        coroot_pairing,
    }
}

/// Untwisted affine extension with the affine node appended last.
pub fn affine_cartan(finite: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = finite.len();
    let theta = highest_root(finite);
    let mut c = vec![vec![0; n + 1]; n + 1];
    for i in 0..n {
        c[i][..n].copy_from_slice(&finite[i]);
        // a_{j0} = -<alpha_j^vee, theta>
        c[i][n] = -finite[i]
            .iter()
            .zip(&theta.coeffs)
            .map(|(a, t)| a * t)
            .sum::<i64>();
        c[n][i] = -theta.coroot_pairing[i];
    }
    c[n][n] = 2;
    c
}

/// Resolves a preset name (`"B3"`, `"affine:A2"`) to its Cartan matrix.
pub fn preset_cartan(name: &str) -> Result<Vec<Vec<i64>>> {
    if let Some(finite) = name.strip_prefix(AFFINE_PREFIX) {
        let c = finite_cartan(finite).ok_or_else(|| Error::UnknownPreset(name.to_string()))?;
        Ok(affine_cartan(&c))
    } else {
        finite_cartan(name).ok_or_else(|| Error::UnknownPreset(name.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn highest_roots_match_tables() {
        let table: &[(&str, &[i64])] = &[
            ("A1", &[1]),
            ("A3", &[1, 1, 1]),
            ("B3", &[1, 2, 2]),
            ("C3", &[2, 2, 1]),
            ("D4", &[1, 2, 1, 1]),
            ("G2", &[3, 2]),
            ("F4", &[2, 3, 4, 2]),
        ];
        for (name, coeffs) in table {
            let c = finite_cartan(name).unwrap();
            assert_eq!(highest_root(&c).coeffs, coeffs.to_vec(), "{name}");
        }
    }

    #[test]
    fn affine_extensions() {
        assert_eq!(
            preset_cartan("affine:A1").unwrap(),
            vec![vec![2, -2], vec![-2, 2]]
        );
        assert_eq!(
            preset_cartan("affine:A2").unwrap(),
            vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]
        );
        // affine G2: node 0 attaches to the long root alpha_2.
        assert_eq!(
            preset_cartan("affine:G2").unwrap(),
            vec![vec![2, -3, 0], vec![-1, 2, -1], vec![0, -1, 2]]
        );
        // affine C3: double bonds at both ends.
        let c = preset_cartan("affine:C3").unwrap();
        assert_eq!(c[3], vec![-1, 0, 0, 2]);
        assert_eq!(c[0][3], -2);
    }

    #[test]
    fn unknown_preset() {
        assert!(matches!(preset_cartan("E9"), Err(Error::UnknownPreset(_))));
        assert!(matches!(
            preset_cartan("affine:X2"),
            Err(Error::UnknownPreset(_))
        ));
    }
}
