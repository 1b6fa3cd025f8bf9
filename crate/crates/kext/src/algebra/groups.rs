//! Multiplication tables for the finite groups of order at most 12.

use crate::algebra::core::GroupData;
use crate::error::{KextError, Result};

fn table_from_op(n: usize, op: impl Fn(usize, usize) -> usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| op(a, b)).collect()).collect()
}

pub fn cyclic(n: usize) -> Result<GroupData> {
    if n == 0 {
        return Err(KextError::BadParameters("cyclic group of order 0".into()));
    }
    let table = table_from_op(n, |a, b| (a + b) % n);
    let names = (0..n).map(|i| format!("g{i}")).collect();
    GroupData::new(table, names)
}

pub fn direct_product(g: &GroupData, h: &GroupData) -> Result<GroupData> {
    let n = g.order * h.order;
    let idx = |a: usize, b: usize| a * h.order + b;
    let table = table_from_op(n, |x, y| {
        let (xa, xb) = (x / h.order, x % h.order);
        let (ya, yb) = (y / h.order, y % h.order);
        idx(g.table[xa][ya], h.table[xb][yb])
    });
    let mut names = Vec::with_capacity(n);
    for a in 0..g.order {
        for b in 0..h.order {
            names.push(format!("({},{})", g.names[a], h.names[b]));
        }
    }
    GroupData::new(table, names)
}

/// Dihedral group of order 2n: elements r^i s^j with s r = r^{-1} s.
pub fn dihedral(n: usize) -> Result<GroupData> {
    if n < 2 {
        return Err(KextError::BadParameters("dihedral group needs n >= 2".into()));
    }
    let ord = 2 * n;
    // index = i + n*j for r^i s^j
    let table = table_from_op(ord, |x, y| {
        let (i, j) = (x % n, x / n);
        let (k, l) = (y % n, y / n);
        // r^i s^j r^k s^l: s^j r^k = r^{±k} s^j
        let kk = if j == 0 { k } else { (n - k) % n };
        ((i + kk) % n) + n * ((j + l) % 2)
    });
    let names = (0..ord)
        .map(|x| {
            let (i, j) = (x % n, x / n);
            match (i, j) {
                (0, 0) => "e".to_string(),
                (i, 0) => format!("r{i}"),
                (0, 1) => "s".to_string(),
                (i, 1) => format!("r{i}s"),
                _ => unreachable!(),
            }
        })
        .collect();
    GroupData::new(table, names)
}

/// Quaternion group of order 8: {±1, ±i, ±j, ±k}.
pub fn quaternion_group() -> Result<GroupData> {
    // indices: 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
    let neg = |x: usize| x ^ 1;
    let base_mul = |a: usize, b: usize| -> usize {
        // on representatives 1,i,j,k (indices 0,2,4,6), with sign in the result
        match (a, b) {
            (0, y) => y,
            (x, 0) => x,
            (2, 2) => 1,      // i*i = -1
            (4, 4) => 1,      // j*j = -1
            (6, 6) => 1,      // k*k = -1
            (2, 4) => 6,      // i*j = k
            (4, 2) => 7,      // j*i = -k
            (4, 6) => 2,      // j*k = i
            (6, 4) => 3,      // k*j = -i
            (6, 2) => 4,      // k*i = j
            (2, 6) => 5,      // i*k = -j
            _ => unreachable!(),
        }
    };
    let table = table_from_op(8, |x, y| {
        let sign = (x & 1) ^ (y & 1);
        let m = base_mul(x & !1, y & !1);
        if sign == 1 {
            neg(m)
        } else {
            m
        }
    });
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    GroupData::new(table, names)
}

/// Alternating group A4 as even permutations of 4 points.
pub fn alternating4() -> Result<GroupData> {
    let mut perms: Vec<[usize; 4]> = Vec::new();
    let mut items = [0usize, 1, 2, 3];
    permute_all(&mut items, 0, &mut perms);
    perms.retain(|p| parity(p) == 0);
    perms.sort();
    // identity first
    let id = [0usize, 1, 2, 3];
    let idpos = perms.iter().position(|p| *p == id).unwrap();
    perms.swap(0, idpos);
    let n = perms.len();
    debug_assert_eq!(n, 12);
    let compose = |a: &[usize; 4], b: &[usize; 4]| -> [usize; 4] {
        // right action composition consistent with a group table
        let mut c = [0usize; 4];
        for (i, ci) in c.iter_mut().enumerate() {
            *ci = b[a[i]];
        }
        c
    };
    let table = table_from_op(n, |x, y| {
        let c = compose(&perms[x], &perms[y]);
        perms.iter().position(|p| *p == c).unwrap()
    });
    let names = perms
        .iter()
        .map(|p| format!("({}{}{}{})", p[0], p[1], p[2], p[3]))
        .collect();
    GroupData::new(table, names)
}

fn permute_all(items: &mut [usize; 4], k: usize, out: &mut Vec<[usize; 4]>) {
    if k == 4 {
        out.push(*items);
        return;
    }
    for i in k..4 {
        items.swap(k, i);
        permute_all(items, k + 1, out);
        items.swap(k, i);
    }
}

fn parity(p: &[usize; 4]) -> usize {
    let mut inv = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    inv % 2
}

/// Dicyclic group of order 12: a^6 = 1, b^2 = a^3, b a = a^{-1} b.
pub fn dicyclic3() -> Result<GroupData> {
    let table = table_from_op(12, |x, y| {
        let (i, j) = (x % 6, x / 6);
        let (k, l) = (y % 6, y / 6);
        // a^i b^j a^k b^l with b a^k = a^{-k} b
        let kk = if j == 0 { k } else { (6 - k) % 6 };
        let mut i2 = (i + kk) % 6;
        let mut j2 = j + l;
        if j2 == 2 {
            // b^2 = a^3
            i2 = (i2 + 3) % 6;
            j2 = 0;
        }
        i2 + 6 * j2
    });
    let names = (0..12)
        .map(|x| {
            let (i, j) = (x % 6, x / 6);
            match (i, j) {
                (0, 0) => "e".to_string(),
                (i, 0) => format!("a{i}"),
                (0, 1) => "b".to_string(),
                (i, 1) => format!("a{i}b"),
                _ => unreachable!(),
            }
        })
        .collect();
    GroupData::new(table, names)
}

/// Looks up a group by name; covers every group of order <= 12.
pub fn group_by_name(name: &str) -> Result<GroupData> {
    match name {
        "C1" => cyclic(1),
        "C2" => cyclic(2),
        "C3" => cyclic(3),
        "C4" => cyclic(4),
        "V4" | "C2xC2" => direct_product(&cyclic(2)?, &cyclic(2)?),
        "C5" => cyclic(5),
        "C6" => cyclic(6),
        "S3" | "D3" => dihedral(3),
        "C7" => cyclic(7),
        "C8" => cyclic(8),
        "C4xC2" => direct_product(&cyclic(4)?, &cyclic(2)?),
        "C2xC2xC2" => {
            let v4 = direct_product(&cyclic(2)?, &cyclic(2)?)?;
            direct_product(&v4, &cyclic(2)?)
        }
        "D4" => dihedral(4),
        "Q8" => quaternion_group(),
        "C9" => cyclic(9),
        "C3xC3" => direct_product(&cyclic(3)?, &cyclic(3)?),
        "C10" => cyclic(10),
        "D5" => dihedral(5),
        "C11" => cyclic(11),
        "C12" => cyclic(12),
        "C6xC2" => direct_product(&cyclic(6)?, &cyclic(2)?),
        "D6" => dihedral(6),
        "A4" => alternating4(),
        "Dic3" | "Q12" => dicyclic3(),
        _ => Err(KextError::BadParameters(format!("unknown group '{name}'"))),
    }
}

/// All group names of order <= 12, one per isomorphism class.
pub fn all_group_names() -> Vec<&'static str> {
    vec![
        "C1", "C2", "C3", "C4", "V4", "C5", "C6", "S3", "C7", "C8", "C4xC2", "C2xC2xC2", "D4",
        "Q8", "C9", "C3xC3", "C10", "D5", "C11", "C12", "C6xC2", "D6", "A4", "Dic3",
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_tables_are_groups() {
        for name in all_group_names() {
            let g = group_by_name(name).unwrap();
            assert!(g.order <= 12, "{name}");
        }
    }

    #[test]
    fn expected_orders() {
        let orders: Vec<usize> = all_group_names()
            .iter()
            .map(|n| group_by_name(n).unwrap().order)
            .collect();
        assert_eq!(
            orders,
            vec![1, 2, 3, 4, 4, 5, 6, 6, 7, 8, 8, 8, 8, 8, 9, 9, 10, 10, 11, 12, 12, 12, 12, 12]
        );
    }

    #[test]
    fn q8_relations() {
        let q = quaternion_group().unwrap();
        // i*j = k, j*i = -k
        assert_eq!(q.table[2][4], 6);
        assert_eq!(q.table[4][2], 7);
        // i^2 = j^2 = k^2 = -1
        assert_eq!(q.table[2][2], 1);
        assert_eq!(q.table[4][4], 1);
        assert_eq!(q.table[6][6], 1);
    }

    #[test]
    fn a4_has_no_order_6_element() {
        let g = alternating4().unwrap();
        for x in 0..12 {
            let mut p = x;
            let mut ord = 1;
            while p != 0 {
                p = g.table[p][x];
                ord += 1;
            }
            assert!(ord == 1 || ord == 2 || ord == 3, "element order {ord}");
        }
    }

    #[test]
    fn dic3_relations() {
        let g = dicyclic3().unwrap();
        let a = 1; // a^1
        let b = 6; // b
        // b^2 = a^3
        assert_eq!(g.table[b][b], 3);
        // b a = a^5 b
        assert_eq!(g.table[b][a], 5 + 6);
        // order of b is 4
        let b2 = g.table[b][b];
        let b4 = g.table[b2][b2];
        assert_eq!(b4, 0);
    }

    #[test]
    fn small_generating_sets() {
        let g = dihedral(4).unwrap();
        let gens = g.generators();
        assert!(gens.len() <= 2);
    }
}
