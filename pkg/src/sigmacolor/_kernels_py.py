"""Pure-Python kernels over rank-compressed interval endpoints.

Every function here takes integer ranks (see ``core.rank_endpoints``), never
the exact rationals themselves. Rank compression keeps order and equality, so
closed-interval intersection on ranks agrees with intersection on the
original coordinates.
"""


def max_overlap(lo, hi):
    events = []
    for a, b in zip(lo, hi):
        events.append(2 * a)  # start
        events.append(2 * b + 1)  # end; sorts after a start at the same rank
    events.sort()
    best = cur = 0
    for e in events:
        if e & 1:
            cur -= 1
        else:
            cur += 1
            if cur > best:
                best = cur
    return best


def first_conflict(lo, hi, colors):
    """Return the lexicographically first (i, j), i < j, of same-colored
    intersecting intervals, or None."""
    n = len(lo)
    by_color = {}
    for i in range(n):
        by_color.setdefault(colors[i], []).append(i)
    best = None
    for members in by_color.values():
        if len(members) < 2:
            continue
        # a group conflicts iff some pair adjacent in left order overlaps
        # a running max right end
        ordered = sorted(members, key=lambda k: lo[k])
        reach = hi[ordered[0]]
        clash = False
        for k in ordered[1:]:
            if lo[k] <= reach:
                clash = True
                break
            reach = max(reach, hi[k])
        if not clash:
            continue
        for a_pos, a in enumerate(members):
            if best is not None and a >= best[0]:
                break
            for b in members[a_pos + 1:]:
                if lo[a] <= hi[b] and lo[b] <= hi[a]:
                    if best is None or (a, b) < best:
                        best = (a, b)
                    break
    return best


def greedy_by_left(lo, hi):
    """Color intervals in nondecreasing order of left rank (ties by index),
    each with the smallest color whose last interval already ended."""
    n = len(lo)
    order = sorted(range(n), key=lambda k: (lo[k], k))
    last_end = []
    out = [0] * n
    for k in order:
        for c, end in enumerate(last_end):
            if end < lo[k]:
                last_end[c] = hi[k]
                out[k] = c
                break
        else:
            out[k] = len(last_end)
            last_end.append(hi[k])
    return out


def first_fit_replay(lo, hi):
    """FirstFit colors for intervals presented in index order."""
    n = len(lo)
    out = [0] * n
    for i in range(n):
        used = set()
        for j in range(i):
            if lo[j] <= hi[i] and lo[i] <= hi[j]:
                used.add(out[j])
        c = 0
        while c in used:
            c += 1
        out[i] = c
    return out
