//! Jaro and Jaro-Winkler similarity over Unicode scalar values.
//!
//! The Winkler variant always applies the prefix bonus (scaling factor 0.1,
//! prefix capped at four characters); there is no boost threshold.

const PREFIX_SCALE: f64 = 0.1;
const MAX_PREFIX: usize = 4;

pub fn jaro(a: &str, b: &str) -> f64 {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    jaro_chars(&a, &b)
}

pub fn jaro_winkler(a: &str, b: &str) -> f64 {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    jaro_winkler_chars(&a, &b)
}

pub fn jaro_winkler_chars(a: &[char], b: &[char]) -> f64 {
    let j = jaro_chars(a, b);
    let prefix = a
        .iter()
        .zip(b)
        .take(MAX_PREFIX)
        .take_while(|(x, y)| x == y)
        .count();
    j + prefix as f64 * PREFIX_SCALE * (1.0 - j)
}

pub fn jaro_chars(a: &[char], b: &[char]) -> f64 {
    if a.is_empty() && b.is_empty() {
        return 1.0;
    }
    if a.is_empty() || b.is_empty() {
        return 0.0;
    }
    if a == b {
        return 1.0;
    }
    if a.len() <= 64 && b.len() <= 64 {
        jaro_bitmask(a, b)
    } else {
        jaro_flags(a, b)
    }
}

fn window(a: &[char], b: &[char]) -> usize {
    (a.len().max(b.len()) / 2).saturating_sub(1)
}

fn score(m: usize, transpositions: usize, la: usize, lb: usize) -> f64 {
    if m == 0 {
        return 0.0;
    }
    let m = m as f64;
    let t = transpositions as f64 / 2.0;
    (m / la as f64 + m / lb as f64 + (m - t) / m) / 3.0
}

// Short tokens: matched positions tracked in two u64 masks.
fn jaro_bitmask(a: &[char], b: &[char]) -> f64 {
    let w = window(a, b);
    let (mut a_mask, mut b_mask) = (0u64, 0u64);
    let mut m = 0;
    for (i, &c) in a.iter().enumerate() {
        let lo = i.saturating_sub(w);
        let hi = (i + w + 1).min(b.len());
        for j in lo..hi {
            if b_mask & (1 << j) == 0 && b[j] == c {
                a_mask |= 1 << i;
                b_mask |= 1 << j;
                m += 1;
                break;
            }
        }
    }
    if m == 0 {
        return 0.0;
    }
    let mut transpositions = 0;
    let mut rest = b_mask;
    let mut a_bits = a_mask;
    while a_bits != 0 {
        let i = a_bits.trailing_zeros() as usize;
        let j = rest.trailing_zeros() as usize;
        if a[i] != b[j] {
            transpositions += 1;
        }
        a_bits &= a_bits - 1;
        rest &= rest - 1;
    }
    score(m, transpositions, a.len(), b.len())
}

fn jaro_flags(a: &[char], b: &[char]) -> f64 {
    let w = window(a, b);
    let mut a_hit = vec![false; a.len()];
    let mut b_hit = vec![false; b.len()];
    let mut m = 0;
    for (i, &c) in a.iter().enumerate() {
        let lo = i.saturating_sub(w);
        let hi = (i + w + 1).min(b.len());
        if let Some(j) = (lo..hi).find(|&j| !b_hit[j] && b[j] == c) {
            a_hit[i] = true;
            b_hit[j] = true;
            m += 1;
        }
    }
    if m == 0 {
        return 0.0;
    }
    let a_matched = a.iter().zip(&a_hit).filter(|(_, h)| **h).map(|(c, _)| c);
    let b_matched = b.iter().zip(&b_hit).filter(|(_, h)| **h).map(|(c, _)| c);
    let transpositions = a_matched.zip(b_matched).filter(|(x, y)| x != y).count();
    score(m, transpositions, a.len(), b.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_disjoint() {
        assert_eq!(jaro("abc", "abc"), 1.0);
        assert_eq!(jaro("abc", "xyz"), 0.0);
        assert_eq!(jaro("", ""), 1.0);
        assert_eq!(jaro("", "a"), 0.0);
        assert_eq!(jaro_winkler("a", ""), 0.0);
        assert_eq!(jaro_winkler("spears", "spears"), 1.0);
    }

    #[test]
    fn classic_pairs() {
        // m=6, one transposition: (1 + 1 + 5/6) / 3.
        assert!((jaro("martha", "marhta") - 17.0 / 18.0).abs() < 1e-12);
        assert!((jaro_winkler("martha", "marhta") - 0.961_111_111_111_111).abs() < 1e-12);
        // j = (4/6 + 4/5 + 1) / 3, prefix "d".
        let j = (4.0 / 6.0 + 4.0 / 5.0 + 1.0) / 3.0;
        assert!((jaro("dwayne", "duane") - j).abs() < 1e-12);
        assert!((jaro_winkler("dwayne", "duane") - 0.84).abs() < 1e-12);
        // Window is 2 here; only i, n, e match.
        assert!((jaro("britney", "online") - (3.0 / 7.0 + 0.5 + 1.0) / 3.0).abs() < 1e-12);
    }

    #[test]
    fn prefix_is_capped_at_four() {
        let j = jaro("abcdefg", "abcdefh");
        assert!((jaro_winkler("abcdefg", "abcdefh") - (j + 0.4 * (1.0 - j))).abs() < 1e-12);
    }

    #[test]
    fn long_tokens_use_the_same_definition() {
        let a: String = "abcdefghij".repeat(8);
        let mut b = a.clone();
        b.replace_range(3..5, "ed");
        let (ca, cb): (Vec<char>, Vec<char>) = (a.chars().collect(), b.chars().collect());
        let long = jaro_chars(&ca, &cb);
        assert_eq!(long, jaro_flags(&ca, &cb));
        let short = jaro_chars(&ca[..40], &cb[..40]);
        assert_eq!(short, jaro_flags(&ca[..40], &cb[..40]));
        assert!(long > 0.9 && long < 1.0);
    }

    #[test]
    fn multibyte_characters_count_once() {
        assert_eq!(jaro("été", "été"), 1.0);
        assert!((jaro("éta", "étb") - (2.0 / 3.0 + 2.0 / 3.0 + 1.0) / 3.0).abs() < 1e-12);
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn bitmask_matches_flag_version(a in "[a-e]{0,20}", b in "[a-e]{0,20}") {
                let (ca, cb): (Vec<char>, Vec<char>) = (a.chars().collect(), b.chars().collect());
                prop_assume!(!ca.is_empty() && !cb.is_empty());
                prop_assert_eq!(jaro_bitmask(&ca, &cb), jaro_flags(&ca, &cb));
            }

            #[test]
            fn symmetric_bounded_dominant(a in "[a-f]{0,12}", b in "[a-f]{0,12}") {
                let (j, jr) = (jaro(&a, &b), jaro(&b, &a));
                let (w, wr) = (jaro_winkler(&a, &b), jaro_winkler(&b, &a));
                prop_assert_eq!(j, jr);
                prop_assert_eq!(w, wr);
                prop_assert!((0.0..=1.0).contains(&j));
                prop_assert!((0.0..=1.0).contains(&w));
                prop_assert!(w >= j);
            }
        }
    }
}
