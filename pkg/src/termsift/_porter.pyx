# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled Porter stemmer kernel.

Same algorithm as ``termsift.porter`` (classic 1980 steps with the
conventional -bli/-logi amendments), operating on a C char buffer. The
fixture test asserts word-for-word agreement with the pure-Python module.
"""

from libc.string cimport memcpy

cdef enum:
    MAXWORD = 255

cdef bint _is_cons(const unsigned char *b, int i) noexcept:
    cdef unsigned char ch = b[i]
    if ch == b'a' or ch == b'e' or ch == b'i' or ch == b'o' or ch == b'u':
        return False
    if ch == b'y':
        return i == 0 or not _is_cons(b, i - 1)
    return True


cdef int _measure(const unsigned char *b, int j) noexcept:
    cdef int i = 0
    cdef int n = 0
    while True:
        if i > j:
            return 0
        if not _is_cons(b, i):
            break
        i += 1
    i += 1
    while True:
        while True:
            if i > j:
                return n
            if _is_cons(b, i):
                break
            i += 1
        i += 1
        n += 1
        while True:
            if i > j:
                return n
            if not _is_cons(b, i):
                break
            i += 1
        i += 1


cdef bint _has_vowel(const unsigned char *b, int j) noexcept:
    cdef int i
    for i in range(j + 1):
        if not _is_cons(b, i):
            return True
    return False


cdef bint _doublec(const unsigned char *b, int k) noexcept:
    return k > 0 and b[k] == b[k - 1] and _is_cons(b, k)


cdef bint _cvc(const unsigned char *b, int i) noexcept:
    if i < 2 or not _is_cons(b, i) or _is_cons(b, i - 1) or not _is_cons(b, i - 2):
        return False
    return b[i] != b'w' and b[i] != b'x' and b[i] != b'y'


cdef bint _ends(const unsigned char *b, int k, const char *s, int slen) noexcept:
    if slen > k + 1:
        return False
    cdef int i
    for i in range(slen):
        if b[k - slen + 1 + i] != <unsigned char>s[i]:
            return False
    return True


cdef int _setto(unsigned char *b, int j, const char *s, int slen) noexcept:
    # overwrite b[j+1:] with s, return new last index
    memcpy(b + j + 1, s, slen)
    return j + slen


cdef int _step1ab(unsigned char *b, int k) noexcept:
    cdef int j
    if b[k] == b's':
        if _ends(b, k, "sses", 4):
            k -= 2
        elif _ends(b, k, "ies", 3):
            k = _setto(b, k - 3, "i", 1)
        elif b[k - 1] != b's':
            k -= 1
    if _ends(b, k, "eed", 3):
        if _measure(b, k - 3) > 0:
            k -= 1
    elif (_ends(b, k, "ed", 2) and _has_vowel(b, k - 2)) or \
         (_ends(b, k, "ing", 3) and _has_vowel(b, k - 3)):
        k = k - 2 if b[k] == b'd' else k - 3
        if _ends(b, k, "at", 2):
            k = _setto(b, k - 2, "ate", 3)
        elif _ends(b, k, "bl", 2):
            k = _setto(b, k - 2, "ble", 3)
        elif _ends(b, k, "iz", 2):
            k = _setto(b, k - 2, "ize", 3)
        elif _doublec(b, k):
            if b[k] != b'l' and b[k] != b's' and b[k] != b'z':
                k -= 1
        elif _measure(b, k) == 1 and _cvc(b, k):
            k = _setto(b, k, "e", 1)
    return k


cdef int _step1c(unsigned char *b, int k) noexcept:
    if b[k] == b'y' and _has_vowel(b, k - 1):
        b[k] = b'i'
    return k


cdef int _rule(unsigned char *b, int k, const char *suf, int sl,
               const char *rep, int rl, int min_m, bint *matched) noexcept:
    if _ends(b, k, suf, sl):
        matched[0] = True
        if _measure(b, k - sl) > min_m:
            k = _setto(b, k - sl, rep, rl)
    return k


cdef int _step2(unsigned char *b, int k) noexcept:
    cdef bint hit = False
    cdef unsigned char ch = b[k - 1] if k >= 1 else b[k]
    if ch == b'a':
        k = _rule(b, k, "ational", 7, "ate", 3, 0, &hit)
        if not hit:
            k = _rule(b, k, "tional", 6, "tion", 4, 0, &hit)
    elif ch == b'c':
        k = _rule(b, k, "enci", 4, "ence", 4, 0, &hit)
        if not hit:
            k = _rule(b, k, "anci", 4, "ance", 4, 0, &hit)
    elif ch == b'e':
        k = _rule(b, k, "izer", 4, "ize", 3, 0, &hit)
    elif ch == b'l':
        k = _rule(b, k, "bli", 3, "ble", 3, 0, &hit)
        if not hit:
            k = _rule(b, k, "alli", 4, "al", 2, 0, &hit)
        if not hit:
            k = _rule(b, k, "entli", 5, "ent", 3, 0, &hit)
        if not hit:
            k = _rule(b, k, "eli", 3, "e", 1, 0, &hit)
        if not hit:
            k = _rule(b, k, "ousli", 5, "ous", 3, 0, &hit)
    elif ch == b'o':
        k = _rule(b, k, "ization", 7, "ize", 3, 0, &hit)
        if not hit:
            k = _rule(b, k, "ation", 5, "ate", 3, 0, &hit)
        if not hit:
            k = _rule(b, k, "ator", 4, "ate", 3, 0, &hit)
    elif ch == b's':
        k = _rule(b, k, "alism", 5, "al", 2, 0, &hit)
        if not hit:
            k = _rule(b, k, "iveness", 7, "ive", 3, 0, &hit)
        if not hit:
            k = _rule(b, k, "fulness", 7, "ful", 3, 0, &hit)
        if not hit:
            k = _rule(b, k, "ousness", 7, "ous", 3, 0, &hit)
    elif ch == b't':
        k = _rule(b, k, "aliti", 5, "al", 2, 0, &hit)
        if not hit:
            k = _rule(b, k, "iviti", 5, "ive", 3, 0, &hit)
        if not hit:
            k = _rule(b, k, "biliti", 6, "ble", 3, 0, &hit)
    elif ch == b'g':
        k = _rule(b, k, "logi", 4, "log", 3, 0, &hit)
    return k


cdef int _step3(unsigned char *b, int k) noexcept:
    cdef bint hit = False
    cdef unsigned char ch = b[k]
    if ch == b'e':
        k = _rule(b, k, "icate", 5, "ic", 2, 0, &hit)
        if not hit:
            k = _rule(b, k, "ative", 5, "", 0, 0, &hit)
        if not hit:
            k = _rule(b, k, "alize", 5, "al", 2, 0, &hit)
    elif ch == b'i':
        k = _rule(b, k, "iciti", 5, "ic", 2, 0, &hit)
    elif ch == b'l':
        k = _rule(b, k, "ical", 4, "ic", 2, 0, &hit)
        if not hit:
            k = _rule(b, k, "ful", 3, "", 0, 0, &hit)
    elif ch == b's':
        k = _rule(b, k, "ness", 4, "", 0, 0, &hit)
    return k


cdef int _del4(unsigned char *b, int k, const char *suf, int sl, bint *matched) noexcept:
    if _ends(b, k, suf, sl):
        matched[0] = True
        if _measure(b, k - sl) > 1:
            k -= sl
    return k


cdef int _step4(unsigned char *b, int k) noexcept:
    cdef bint hit = False
    cdef int j
    cdef unsigned char ch = b[k - 1] if k >= 1 else b[k]
    if ch == b'a':
        k = _del4(b, k, "al", 2, &hit)
    elif ch == b'c':
        k = _del4(b, k, "ance", 4, &hit)
        if not hit:
            k = _del4(b, k, "ence", 4, &hit)
    elif ch == b'e':
        k = _del4(b, k, "er", 2, &hit)
    elif ch == b'i':
        k = _del4(b, k, "ic", 2, &hit)
    elif ch == b'l':
        k = _del4(b, k, "able", 4, &hit)
        if not hit:
            k = _del4(b, k, "ible", 4, &hit)
    elif ch == b'n':
        k = _del4(b, k, "ant", 3, &hit)
        if not hit:
            k = _del4(b, k, "ement", 5, &hit)
        if not hit:
            k = _del4(b, k, "ment", 4, &hit)
        if not hit:
            k = _del4(b, k, "ent", 3, &hit)
    elif ch == b'o':
        if _ends(b, k, "ion", 3):
            j = k - 3
            # b[j] wraps to the last char when the suffix is the whole
            # buffer, matching the reference implementation's indexing
            ch = b[j] if j >= 0 else b[k]
            if ch == b's' or ch == b't':
                if _measure(b, j) > 1:
                    k = j
            elif _ends(b, k, "ou", 2):
                k = _del4(b, k, "ou", 2, &hit)
        else:
            k = _del4(b, k, "ou", 2, &hit)
    elif ch == b's':
        k = _del4(b, k, "ism", 3, &hit)
    elif ch == b't':
        k = _del4(b, k, "ate", 3, &hit)
        if not hit:
            k = _del4(b, k, "iti", 3, &hit)
    elif ch == b'u':
        k = _del4(b, k, "ous", 3, &hit)
    elif ch == b'v':
        k = _del4(b, k, "ive", 3, &hit)
    elif ch == b'z':
        k = _del4(b, k, "ize", 3, &hit)
    return k


cdef int _step5(unsigned char *b, int k) noexcept:
    cdef int j = k
    cdef int m
    if b[k] == b'e':
        m = _measure(b, j)
        if m > 1 or (m == 1 and not _cvc(b, k - 1)):
            k -= 1
    if b[k] == b'l' and _doublec(b, k) and _measure(b, j) > 1:
        k -= 1
    return k


def stem(word):
    """Return the Porter stem of a lowercase word (compiled kernel)."""
    if not word:
        raise ValueError("cannot stem an empty string")
    cdef bytes raw = word.encode("ascii", "strict") if isinstance(word, str) else bytes(word)
    cdef int n = len(raw)
    if n <= 2:
        return word
    if n > MAXWORD - 8:
        # absurd lengths fall back to the pure implementation
        from termsift.porter import stem as pystem
        return pystem(word)
    cdef unsigned char buf[MAXWORD]
    memcpy(buf, <const char *>raw, n)
    cdef int k = n - 1
    k = _step1ab(buf, k)
    k = _step1c(buf, k)
    k = _step2(buf, k)
    k = _step3(buf, k)
    k = _step4(buf, k)
    k = _step5(buf, k)
    return buf[:k + 1].decode("ascii")
