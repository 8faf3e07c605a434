//! Snowball English ("Porter2") stemmer.
//!
//! Hand implementation of the full rule set: the word-level exception lists,
//! the apostrophe prelude and y/Y consonant marking, R1/R2 region marking
//! (with the gener-/commun-/arsen- R1 shortcuts), steps 0 through 5 with
//! longest-suffix-wins matching, and the Y postlude. Input is expected to be
//! lowercase; characters outside a-z (including any non-ASCII) are treated as
//! consonants and pass through untouched, so the function is total.

use alloc::string::String;
use alloc::vec::Vec;

/// Words the algorithm stems as a whole, before any rule runs.
const EXCEPTION1: &[(&str, &str)] = &[
    ("skis", "ski"),
    ("skies", "sky"),
    ("dying", "die"),
    ("lying", "lie"),
    ("tying", "tie"),
    ("idly", "idl"),
    ("gently", "gentl"),
    ("ugly", "ugli"),
    ("early", "earli"),
    ("only", "onli"),
    ("singly", "singl"),
    ("sky", "sky"),
    ("news", "news"),
    ("howe", "howe"),
    ("atlas", "atlas"),
    ("cosmos", "cosmos"),
    ("bias", "bias"),
    ("andes", "andes"),
];

/// Words frozen after step 1a (their -ing/-eed endings are not suffixes).
const EXCEPTION2: &[&str] = &[
    "inning", "outing", "canning", "herring", "earring", "proceed", "exceed", "succeed",
];

/// Vowels. A capital Y is the prelude's marker for consonant-y and is
/// deliberately absent here.
fn is_vowel(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u' | 'y')
}

fn is_double(a: char, b: char) -> bool {
    a == b && matches!(a, 'b' | 'd' | 'f' | 'g' | 'm' | 'n' | 'p' | 'r' | 't')
}

/// Letters that may precede the -li suffix for step 2's li-deletion.
fn valid_li(c: char) -> bool {
    matches!(c, 'c' | 'd' | 'e' | 'g' | 'h' | 'k' | 'm' | 'n' | 'r' | 't')
}

/// True when `w` ends in a short syllable: consonant-vowel-consonant where
/// the final consonant is not w, x, or consonant-y; or, for a two-letter
/// word, vowel then consonant.
fn ends_short_syllable(w: &[char]) -> bool {
    let n = w.len();
    if n == 2 {
        return is_vowel(w[0]) && !is_vowel(w[1]);
    }
    if n >= 3 {
        let c = w[n - 1];
        return !is_vowel(w[n - 3])
            && is_vowel(w[n - 2])
            && !is_vowel(c)
            && !matches!(c, 'w' | 'x' | 'Y');
    }
    false
}

/// Cursor position after "go past a vowel, then go past a non-vowel",
/// starting at `start`; the word length when either never happens.
fn region_after(w: &[char], start: usize) -> usize {
    let n = w.len();
    let mut i = start;
    while i < n && !is_vowel(w[i]) {
        i += 1;
    }
    if i == n {
        return n;
    }
    i += 1;
    while i < n && is_vowel(w[i]) {
        i += 1;
    }
    if i == n {
        return n;
    }
    i + 1
}

fn starts_with(w: &[char], prefix: &str) -> bool {
    w.len() >= prefix.len() && w.iter().zip(prefix.chars()).all(|(&a, b)| a == b)
}

fn ends_with(w: &[char], suffix: &str) -> bool {
    let sn = suffix.chars().count();
    w.len() >= sn && w[w.len() - sn..].iter().zip(suffix.chars()).all(|(&a, b)| a == b)
}

struct Stemmer {
    w: Vec<char>,
    p1: usize,
    p2: usize,
}

impl Stemmer {
    fn len(&self) -> usize {
        self.w.len()
    }

    /// Start index of `suffix` assuming it matches; callers pair this with
    /// `ends_with`.
    fn suffix_start(&self, suffix: &str) -> usize {
        self.len() - suffix.chars().count()
    }

    fn in_r1(&self, suffix: &str) -> bool {
        self.suffix_start(suffix) >= self.p1
    }

    fn in_r2(&self, suffix: &str) -> bool {
        self.suffix_start(suffix) >= self.p2
    }

    fn truncate(&mut self, new_len: usize) {
        self.w.truncate(new_len);
    }

    /// Replaces a matched suffix. Only ever called with `ends_with` verified.
    fn replace(&mut self, suffix: &str, replacement: &str) {
        let at = self.suffix_start(suffix);
        self.w.truncate(at);
        self.w.extend(replacement.chars());
    }

    fn has_vowel_before(&self, end: usize) -> bool {
        self.w[..end].iter().any(|&c| is_vowel(c))
    }

    fn mark_regions(&mut self) {
        let n = self.len();
        self.p1 = n;
        for prefix in ["gener", "commun", "arsen"] {
            if starts_with(&self.w, prefix) {
                self.p1 = prefix.len();
                break;
            }
        }
        if self.p1 == n {
            self.p1 = region_after(&self.w, 0);
        }
        self.p2 = region_after(&self.w, self.p1);
    }

    fn step0(&mut self) {
        for suffix in ["'s'", "'s", "'"] {
            if ends_with(&self.w, suffix) {
                let at = self.suffix_start(suffix);
                self.truncate(at);
                return;
            }
        }
    }

    fn step1a(&mut self) {
        if ends_with(&self.w, "sses") {
            let n = self.len();
            self.truncate(n - 2);
        } else if ends_with(&self.w, "ied") || ends_with(&self.w, "ies") {
            let n = self.len();
            if n > 4 {
                self.truncate(n - 2);
            } else {
                self.truncate(n - 1);
            }
        } else if ends_with(&self.w, "us") || ends_with(&self.w, "ss") {
            // keep
        } else if ends_with(&self.w, "s") {
            // Delete only if some vowel sits strictly before the letter
            // preceding the s ("gas" keeps, "gaps" drops).
            let n = self.len();
            if n >= 3 && self.has_vowel_before(n - 2) {
                self.truncate(n - 1);
            }
        }
    }

    fn step1b(&mut self) {
        let suffix = ["eedly", "ingly", "edly", "eed", "ing", "ed"]
            .into_iter()
            .find(|s| ends_with(&self.w, s));
        let Some(suffix) = suffix else { return };
        match suffix {
            "eedly" | "eed" => {
                if self.in_r1(suffix) {
                    self.replace(suffix, "ee");
                }
            }
            _ => {
                let at = self.suffix_start(suffix);
                if !self.has_vowel_before(at) {
                    return;
                }
                self.truncate(at);
                let n = self.len();
                if ends_with(&self.w, "at") || ends_with(&self.w, "bl") || ends_with(&self.w, "iz")
                {
                    self.w.push('e');
                } else if n >= 2 && is_double(self.w[n - 2], self.w[n - 1]) {
                    self.truncate(n - 1);
                } else if self.p1 >= n && ends_short_syllable(&self.w) {
                    self.w.push('e');
                }
            }
        }
    }

    fn step1c(&mut self) {
        let n = self.len();
        if n >= 3 && matches!(self.w[n - 1], 'y' | 'Y') && !is_vowel(self.w[n - 2]) {
            self.w[n - 1] = 'i';
        }
    }

    fn step2(&mut self) {
        // Longest listed suffix wins; a failed side condition means no
        // action at all, not a retry with a shorter suffix.
        const RULES: &[(&str, &str)] = &[
            ("ational", "ate"),
            ("ization", "ize"),
            ("iveness", "ive"),
            ("fulness", "ful"),
            ("ousness", "ous"),
            ("tional", "tion"),
            ("lessli", "less"),
            ("biliti", "ble"),
            ("entli", "ent"),
            ("ation", "ate"),
            ("alism", "al"),
            ("aliti", "al"),
            ("ousli", "ous"),
            ("iviti", "ive"),
            ("fulli", "ful"),
            ("enci", "ence"),
            ("anci", "ance"),
            ("abli", "able"),
            ("izer", "ize"),
            ("ator", "ate"),
            ("alli", "al"),
            ("bli", "ble"),
            ("ogi", "og"),
            ("li", ""),
        ];
        for &(suffix, replacement) in RULES {
            if !ends_with(&self.w, suffix) {
                continue;
            }
            if self.in_r1(suffix) {
                let at = self.suffix_start(suffix);
                match suffix {
                    "ogi" => {
                        if at > 0 && self.w[at - 1] == 'l' {
                            self.replace(suffix, replacement);
                        }
                    }
                    "li" => {
                        if at > 0 && valid_li(self.w[at - 1]) {
                            self.truncate(at);
                        }
                    }
                    _ => self.replace(suffix, replacement),
                }
            }
            return;
        }
    }

    fn step3(&mut self) {
        const RULES: &[(&str, &str)] = &[
            ("ational", "ate"),
            ("tional", "tion"),
            ("alize", "al"),
            ("icate", "ic"),
            ("iciti", "ic"),
            ("ative", ""),
            ("ical", "ic"),
            ("ness", ""),
            ("ful", ""),
        ];
        for &(suffix, replacement) in RULES {
            if !ends_with(&self.w, suffix) {
                continue;
            }
            if self.in_r1(suffix) {
                if suffix == "ative" {
                    if self.in_r2(suffix) {
                        let at = self.suffix_start(suffix);
                        self.truncate(at);
                    }
                } else {
                    self.replace(suffix, replacement);
                }
            }
            return;
        }
    }

    fn step4(&mut self) {
        const SUFFIXES: &[&str] = &[
            "ement", "ance", "ence", "able", "ible", "ment", "ant", "ent", "ism", "ate", "iti",
            "ous", "ive", "ize", "ion", "al", "er", "ic",
        ];
        for &suffix in SUFFIXES {
            if !ends_with(&self.w, suffix) {
                continue;
            }
            if self.in_r2(suffix) {
                let at = self.suffix_start(suffix);
                if suffix == "ion" {
                    if at > 0 && matches!(self.w[at - 1], 's' | 't') {
                        self.truncate(at);
                    }
                } else {
                    self.truncate(at);
                }
            }
            return;
        }
    }

    fn step5(&mut self) {
        let n = self.len();
        if n == 0 {
            return;
        }
        if self.w[n - 1] == 'e' {
            let at = n - 1;
            if at >= self.p2 || (at >= self.p1 && !ends_short_syllable(&self.w[..at])) {
                self.truncate(at);
            }
        } else if self.w[n - 1] == 'l' {
            let at = n - 1;
            if at >= self.p2 && n >= 2 && self.w[n - 2] == 'l' {
                self.truncate(at);
            }
        }
    }
}

/// Stems one lowercase token.
pub fn stem(word: &str) -> String {
    let mut w: Vec<char> = word.chars().collect();

    for &(from, to) in EXCEPTION1 {
        if starts_with(&w, from) && w.len() == from.len() {
            return String::from(to);
        }
    }
    if w.len() <= 2 {
        return word.into();
    }

    // Prelude: one leading apostrophe drops; y at the start or after a vowel
    // is marked as the consonant Y.
    if w[0] == '\'' {
        w.remove(0);
    }
    if !w.is_empty() && w[0] == 'y' {
        w[0] = 'Y';
    }
    for i in 1..w.len() {
        if w[i] == 'y' && is_vowel(w[i - 1]) {
            w[i] = 'Y';
        }
    }

    let mut st = Stemmer { w, p1: 0, p2: 0 };
    st.mark_regions();

    st.step0();
    st.step1a();

    let frozen = EXCEPTION2.iter().any(|&e| {
        st.len() == e.len() && st.w.iter().zip(e.chars()).all(|(&a, b)| a == b)
    });
    if !frozen {
        st.step1b();
        st.step1c();
        st.step2();
        st.step3();
        st.step4();
        st.step5();
    }

    st.w.into_iter().map(|c| if c == 'Y' { 'y' } else { c }).collect()
}
