//! Reference checkers that share no code path with the library's search.
#![allow(dead_code)]

/// Every sub-collection union and every pairwise intersection of a family of
/// subsets of an `n`-point set, checked literally. `code` has bit `s` set when
/// subset `s` is a member.
pub fn brute_is_topology(code: u64, n: usize) -> bool {
    let full = (1u64 << n) - 1;
    let members: Vec<u64> = (0..=full).filter(|s| code >> s & 1 == 1).collect();
    if code & 1 == 0 || code >> full & 1 == 0 {
        return false;
    }
    for a in &members {
        for b in &members {
            if code >> (a & b) & 1 == 0 {
                return false;
            }
        }
    }
    let k = members.len();
    for pick in 0u64..(1 << k) {
        let union = (0..k)
            .filter(|i| pick >> i & 1 == 1)
            .fold(0, |acc, i| acc | members[i]);
        if code >> union & 1 == 0 {
            return false;
        }
    }
    true
}

/// All topologies on `n ≤ 4` points by testing all `2^(2^n)` families.
pub fn brute_force_topologies(n: usize) -> Vec<u32> {
    assert!(n <= 4);
    let families = 1u64 << (1u64 << n);
    (0..families)
        .filter(|&code| brute_is_topology(code, n))
        .map(|code| code as u32)
        .collect()
}

/// Topologies on `n` points from their specialization preorders: the open
/// sets of a finite topology are exactly the up-sets of a preorder.
pub fn preorder_topologies(n: usize) -> Vec<u32> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .collect();
    let mut out = Vec::new();
    for pick in 0u64..(1 << pairs.len()) {
        let mut le = vec![vec![false; n]; n];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if pick >> k & 1 == 1 {
                le[i][j] = true;
            }
        }
        let transitive =
            (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(le[i][j] && le[j][k]) || le[i][k])));
        if !transitive {
            continue;
        }
        let mut code = 0u32;
        for s in 0u32..(1 << n) {
            let up_set =
                (0..n).all(|i| s >> i & 1 == 0 || (0..n).all(|j| !le[i][j] || s >> j & 1 == 1));
            if up_set {
                code |= 1 << s;
            }
        }
        out.push(code);
    }
    out
}

/// Neighborhoods of point `x` straight from the definition.
pub fn brute_neighborhoods(opens: &[u32], n: usize, x: usize) -> Vec<u32> {
    (0..1u32 << n)
        .filter(|&nb| opens.iter().any(|&u| u >> x & 1 == 1 && u & !nb == 0))
        .collect()
}
