"""Pure-Python implementations of the hot coefficient kernels.

Coefficients are arbitrary objects supporting +, -, * with each other and
with the int 0 (exact rationals and cyclotomic numbers both qualify), so
the same kernels serve every coefficient field in the package.
"""

BACKEND = "pure"


def conv(a, b):
    """Dense polynomial product: c[k] = sum a[i]*b[k-i]."""
    la, lb = len(a), len(b)
    if la == 0 or lb == 0:
        return []
    out = [0] * (la + lb - 1)
    for i in range(la):
        ai = a[i]
        if not ai:
            continue
        for j in range(lb):
            bj = b[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def series_div(num, den, count):
    """First `count` Taylor coefficients of num(x)/den(x); requires den[0] == 1.

    Uses the linear recurrence c[k] = num[k] - sum_{i>=1} den[i]*c[k-i].
    """
    if count <= 0:
        return []
    ld = len(den)
    out = [0] * count
    for k in range(count):
        acc = num[k] if k < len(num) else 0
        top = ld - 1 if ld - 1 < k else k
        for i in range(1, top + 1):
            di = den[i]
            if di:
                acc = acc - di * out[k - i]
        out[k] = acc
    return out
