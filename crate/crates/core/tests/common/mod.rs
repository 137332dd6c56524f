//! Independent oracles shared by the integration tests. Nothing here calls
//! into the code paths it is used to check.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

/// Naive generate-and-filter: every word over `{-, +, 1..n/2}` of length `n`,
/// kept when each label used occurs exactly twice, labels first appear in
/// increasing order starting from 1, and the sign counts match `(p, q)`.
/// Words are returned in rendered form.
pub fn naive_clans(p: usize, q: usize) -> BTreeSet<String> {
    let n = p + q;
    let max_label = n / 2;
    let alphabet: Vec<char> = "-+"
        .chars()
        .chain((1..=max_label).map(|k| char::from_digit(k as u32, 10).unwrap()))
        .collect();
    let mut out = BTreeSet::new();
    let total = alphabet.len().pow(n as u32);
    for mut code in 0..total {
        let mut word = Vec::with_capacity(n);
        for _ in 0..n {
            word.push(alphabet[code % alphabet.len()]);
            code /= alphabet.len();
        }
        let plus = word.iter().filter(|&&c| c == '+').count();
        let minus = word.iter().filter(|&&c| c == '-').count();
        let mut next = 1;
        let mut ok = true;
        for (i, &c) in word.iter().enumerate() {
            if let Some(d) = c.to_digit(10) {
                let d = d as usize;
                let count = word.iter().filter(|&&x| x == c).count();
                if count != 2 {
                    ok = false;
                    break;
                }
                let first = word.iter().position(|&x| x == c).unwrap();
                if first == i {
                    if d != next {
                        ok = false;
                        break;
                    }
                    next += 1;
                }
            }
        }
        let pairs = (n - plus - minus) / 2;
        if ok && plus + pairs == p && minus + pairs == q {
            out.insert(word.into_iter().collect());
        }
    }
    out
}

/// Base clan read off a rendered clan string: a label's first occurrence
/// becomes `-`, its second `+`.
pub fn naive_base(clan: &str) -> String {
    let mut seen = HashSet::new();
    clan.chars()
        .map(|c| {
            if c.is_ascii_digit() {
                if seen.insert(c) {
                    '-'
                } else {
                    '+'
                }
            } else {
                c
            }
        })
        .collect()
}

fn inversions(w: &[usize]) -> usize {
    let mut k = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                k += 1;
            }
        }
    }
    k
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, n: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(cur, used, n, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n + 1], n, &mut out);
    out
}

/// Bruhat order on `S_n` as the reflexive-transitive closure of `w -> w t`
/// for transpositions `t` that increase the inversion count. Returns the
/// permutations and `le[a][b]`.
pub fn bruhat_oracle(n: usize) -> (Vec<Vec<usize>>, Vec<Vec<bool>>) {
    let perms = permutations(n);
    let index = |w: &Vec<usize>| perms.iter().position(|x| x == w).unwrap();
    let mut le = vec![vec![false; perms.len()]; perms.len()];
    for (a, start) in perms.iter().enumerate() {
        let mut queue = VecDeque::from([start.clone()]);
        le[a][a] = true;
        while let Some(w) = queue.pop_front() {
            for i in 0..n {
                for j in i + 1..n {
                    let mut u = w.clone();
                    u.swap(i, j);
                    if inversions(&u) > inversions(&w) {
                        let b = index(&u);
                        if !le[a][b] {
                            le[a][b] = true;
                            queue.push_back(u);
                        }
                    }
                }
            }
        }
    }
    (perms, le)
}

/// Cover edges of the order on `C(2,1)` as drawn, lower -> upper.
pub const C21_COVERS: [(&str, &str); 6] = [
    ("++-", "+11"),
    ("+-+", "+11"),
    ("+-+", "11+"),
    ("-++", "11+"),
    ("+11", "1+1"),
    ("11+", "1+1"),
];

/// Cover edges of the order on `C(2,2)` as drawn, lower -> upper.
pub const C22_COVERS: [(&str, &str); 38] = [
    ("1+-1", "1221"),
    ("1212", "1221"),
    ("1-+1", "1221"),
    ("+1-1", "1+-1"),
    ("1+1-", "1+-1"),
    ("1122", "1+-1"),
    ("+1-1", "1212"),
    ("1+1-", "1212"),
    ("1122", "1212"),
    ("1-1+", "1212"),
    ("-1+1", "1212"),
    ("1122", "1-+1"),
    ("1-1+", "1-+1"),
    ("-1+1", "1-+1"),
    ("+11-", "+1-1"),
    ("+-11", "+1-1"),
    ("+11-", "1+1-"),
    ("11+-", "1+1-"),
    ("+-11", "1122"),
    ("11+-", "1122"),
    ("11-+", "1122"),
    ("-+11", "1122"),
    ("11-+", "1-1+"),
    ("-11+", "1-1+"),
    ("-+11", "-1+1"),
    ("-11+", "-1+1"),
    ("++--", "+11-"),
    ("+-+-", "+11-"),
    ("+-+-", "+-11"),
    ("+--+", "+-11"),
    ("+-+-", "11+-"),
    ("-++-", "11+-"),
    ("+--+", "11-+"),
    ("-+-+", "11-+"),
    ("-++-", "-+11"),
    ("-+-+", "-+11"),
    ("-+-+", "-11+"),
    ("--++", "-11+"),
];

/// Sects of `C(2,2)` as coloured in the drawing.
pub const C22_SECTS: [&[&str]; 6] = [
    &["++--"],
    &["+-+-", "+11-"],
    &["+--+", "+-11", "+1-1"],
    &["-++-", "11+-", "1+1-"],
    &["-+-+", "11-+", "-+11", "1122", "1+-1"],
    &["--++", "-11+", "1-1+", "-1+1", "1-+1", "1212", "1221"],
];

/// The 6×6 example matrix and its north-west rank-control matrix.
pub const EXAMPLE_M: [[i64; 6]; 6] = [
    [1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [0, 1, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0],
];

pub const EXAMPLE_RK: [[usize; 6]; 6] = [
    [1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, 2, 2],
    [1, 2, 2, 2, 3, 3],
    [1, 2, 3, 3, 4, 4],
    [1, 2, 3, 3, 4, 4],
];

pub fn edge_set(edges: &[(&str, &str)]) -> BTreeSet<(String, String)> {
    edges
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect()
}
