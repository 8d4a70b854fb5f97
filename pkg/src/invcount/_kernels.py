"""Optional numba-compiled twins of the engine and the swap generator.

Import never fails: HAVE_NUMBA reports availability and the pure-Python
paths remain authoritative.  The kernels implement the same algorithms with
the same integer accounting and are pinned to the reference implementations
by exhaustive and randomized parity tests; counts and RunStats are identical.

Differences confined to this module:
  * block storage is flattened into index arrays over one key buffer; all
    arrays are preallocated in two halves and a rare compaction pass copies
    the live blocks into the idle half (rebinding an array inside the hot
    loop makes numba emit per-iteration refcount traffic, which costs more
    than the whole algorithm);
  * the split pivot is found by a stable merge argsort instead of
    median-of-medians (the selected element is the same under the strict
    (key, position) order, only the internal comparison count differs);
  * accumulators are int64, so inputs are limited to lengths where the
    squared threshold arithmetic fits (the driver enforces n <= 2**30).
"""

from __future__ import annotations

import numpy as np

from .instrumentation import PhaseRecord, RunStats

__all__ = ["HAVE_NUMBA", "adjacent_swaps_kernel", "kernel_count", "warmup"]

try:
    from numba import njit

    HAVE_NUMBA = True
except Exception:  # pragma: no cover - exercised only without the extra
    HAVE_NUMBA = False

if HAVE_NUMBA:
    _U12 = np.uint64(12)
    _U25 = np.uint64(25)
    _U27 = np.uint64(27)
    _XS_MULT = np.uint64(0x2545F4914F6CDD1D)

    @njit(inline="always")
    def _stable_argsort(keys, m, ord_, tmp):
        # argsort of keys[:m] by (key, index): insertion-sorted runs of 32,
        # then bottom-up merges taking left on equal keys.  Merges write to
        # tmp and copy back instead of ping-ponging: a rebound array variable
        # would cost refcount ops at every call site once this is inlined.
        for i in range(m):
            ord_[i] = i
        run = 32
        start = 0
        while start < m:
            end = min(start + run, m)
            for j in range(start + 1, end):
                oj = ord_[j]
                kj = keys[oj]
                i = j - 1
                while i >= start and keys[ord_[i]] > kj:
                    ord_[i + 1] = ord_[i]
                    i -= 1
                ord_[i + 1] = oj
            start = end
        width = run
        while width < m:
            lo = 0
            while lo < m:
                mid = lo + width
                hi = min(lo + 2 * width, m)
                if mid >= m:
                    for x in range(lo, m):
                        tmp[x] = ord_[x]
                    break
                i = lo
                j = mid
                k = lo
                while i < mid and j < hi:
                    if keys[ord_[j]] < keys[ord_[i]]:
                        tmp[k] = ord_[j]
                        j += 1
                    else:
                        tmp[k] = ord_[i]
                        i += 1
                    k += 1
                while i < mid:
                    tmp[k] = ord_[i]
                    i += 1
                    k += 1
                while j < hi:
                    tmp[k] = ord_[j]
                    j += 1
                    k += 1
                lo = hi
            for x in range(m):
                ord_[x] = tmp[x]
            width *= 2

    @njit(inline="always")
    def _merge_count_vals(a, tmp, m):
        # inversion count of a[:m]; destroys a[:m] and tmp[:m].  Insertion
        # sort counts shifts (one per inversion) in runs of 32, then merge
        # passes count strictly-smaller right elements; copy-back instead of
        # ping-pong for the same refcount reason as _stable_argsort.
        total = 0
        run = 32
        start = 0
        while start < m:
            end = min(start + run, m)
            for j in range(start + 1, end):
                v = a[j]
                i = j - 1
                while i >= start and a[i] > v:
                    a[i + 1] = a[i]
                    total += 1
                    i -= 1
                a[i + 1] = v
            start = end
        width = run
        while width < m:
            lo = 0
            while lo < m:
                mid = lo + width
                hi = min(lo + 2 * width, m)
                if mid >= m:
                    for x in range(lo, m):
                        tmp[x] = a[x]
                    break
                i = lo
                j = mid
                k = lo
                while i < mid and j < hi:
                    if a[j] < a[i]:
                        total += mid - i
                        tmp[k] = a[j]
                        j += 1
                    else:
                        tmp[k] = a[i]
                        i += 1
                    k += 1
                while i < mid:
                    tmp[k] = a[i]
                    i += 1
                    k += 1
                while j < hi:
                    tmp[k] = a[j]
                    j += 1
                    k += 1
                lo = hi
            for x in range(m):
                a[x] = tmp[x]
            width *= 2
        return total

    @njit(inline="always")
    def _fenwick_count_block(vals, m, ord_, tmp, rank, bit):
        _stable_argsort(vals, m, ord_, tmp)
        u = 0
        prev = np.int64(0)
        for idx in range(m):
            v = vals[ord_[idx]]
            if idx == 0 or v != prev:
                u += 1
                prev = v
            rank[ord_[idx]] = u
        for i in range(u + 1):
            bit[i] = 0
        total = 0
        for p in range(m - 1, -1, -1):
            i = rank[p] - 1
            while i > 0:
                total += bit[i]
                i -= i & (-i)
            i = rank[p]
            while i <= u:
                bit[i] += 1
                i += i & (-i)
        return total

    @njit(cache=True)
    def _compact(
        head,
        kbuf,
        base_k,
        half_k,
        s_next,
        s_beg,
        s_end,
        s_rev,
        base_s,
        half_s,
        b_next,
        b_size,
        b_max,
        b_sh,
        b_st,
        base_b,
        half_b,
    ):
        # copy live blocks, in stored order, into the idle halves; old
        # records stay readable because the id ranges are disjoint
        new_k = half_k - base_k
        new_s = half_s - base_s
        new_b = half_b - base_b
        w = new_k
        sid_out = new_s
        bid_out = new_b
        newhead = -1
        prev = -1
        blk = head
        while blk != -1:
            start = w
            sid = b_sh[blk]
            while sid != -1:
                if s_rev[sid] == 1:
                    i = s_end[sid] - 1
                    while i >= s_beg[sid]:
                        kbuf[w] = kbuf[i]
                        w += 1
                        i -= 1
                else:
                    i = s_beg[sid]
                    while i < s_end[sid]:
                        kbuf[w] = kbuf[i]
                        w += 1
                        i += 1
                sid = s_next[sid]
            s_next[sid_out] = -1
            s_beg[sid_out] = start
            s_end[sid_out] = w
            s_rev[sid_out] = 0
            b_size[bid_out] = w - start
            b_max[bid_out] = b_max[blk]
            b_sh[bid_out] = sid_out
            b_st[bid_out] = sid_out
            b_next[bid_out] = -1
            if prev == -1:
                newhead = bid_out
            else:
                b_next[prev] = bid_out
            prev = bid_out
            sid_out += 1
            bid_out += 1
            blk = b_next[blk]
        return newhead, new_k, w, new_s, sid_out, new_b, bid_out

    @njit(cache=True)
    def _engine_run(keys, use_fenwick):
        n = keys.shape[0]
        nn = n * n

        # worst-case live state is n keys, n segments, n blocks; a half of
        # 2n+64 therefore always leaves n+ headroom after a compaction, so
        # compactions are rare and their O(n) cost amortizes away.  np.empty
        # reserves address space only; untouched pages cost nothing.
        half_k = 2 * n + 64
        half_s = 2 * n + 64
        half_b = 2 * n + 64
        kbuf = np.empty(2 * half_k, np.int64)
        s_next = np.empty(2 * half_s, np.int64)
        s_beg = np.empty(2 * half_s, np.int64)
        s_end = np.empty(2 * half_s, np.int64)
        s_rev = np.empty(2 * half_s, np.uint8)
        b_next = np.empty(2 * half_b, np.int64)
        b_size = np.empty(2 * half_b, np.int64)
        b_max = np.empty(2 * half_b, np.int64)
        b_sh = np.empty(2 * half_b, np.int64)
        b_st = np.empty(2 * half_b, np.int64)
        scap = n + 2 if n + 2 > 8 else 8
        sc_keys = np.empty(scap, np.int64)
        sc_ord = np.empty(scap, np.int64)
        sc_tmp = np.empty(scap, np.int64)
        sc_small = np.empty(scap, np.uint8)

        ph_q = np.zeros(64, np.int64)
        ph_t = np.zeros(64, np.int64)
        ph_c = np.zeros(64, np.int64)

        base_k = 0
        ktop = 0
        base_s = 0
        ns = 0
        base_b = 0
        nb = 0
        head = -1
        q = 1
        quota = nn  # nn // q, kept in sync with q
        phase = 1
        t = 0
        c = 0
        inv = 0
        done = 0
        split_count = 0
        split_work = 0

        for fed in range(n - 1, -1, -1):  # the input is fed back to front
            key = keys[fed]
            if head == -1:
                c += 1  # creation probe
                s_next[ns] = -1
                s_beg[ns] = ktop
                s_end[ns] = ktop + 1
                s_rev[ns] = 1
                kbuf[ktop] = key
                b_next[nb] = -1
                b_size[nb] = 1
                b_max[nb] = key
                b_sh[nb] = ns
                b_st[nb] = ns
                head = nb
                ktop += 1
                ns += 1
                nb += 1
                t += 1
                done += 1
                continue
            m = 2 * q + 1
            need_k = m + 1 if m <= done + 1 else 1
            if (
                ktop + need_k > base_k + half_k
                or ns + 3 > base_s + half_s
                or nb + 1 > base_b + half_b
            ):
                head, base_k, ktop, base_s, ns, base_b, nb = _compact(
                    head, kbuf, base_k, half_k,
                    s_next, s_beg, s_end, s_rev, base_s, half_s,
                    b_next, b_size, b_max, b_sh, b_st, base_b, half_b,
                )
            while True:
                blk = head
                delta = 0
                land = -1
                while True:
                    d = c - t
                    if d > 0 and d * d > quota:
                        break  # phase threshold tripped before this comparison
                    c += 1
                    if key <= b_max[blk]:
                        land = blk
                        break
                    nxt = b_next[blk]
                    if nxt == -1:
                        b_max[blk] = key
                        land = blk
                        break
                    delta += b_size[blk]
                    blk = nxt
                if land == -1:
                    if phase >= 64:
                        raise RuntimeError("phase limit exceeded")
                    ph_q[phase - 1] = q
                    ph_t[phase - 1] = t
                    ph_c[phase - 1] = c
                    phase += 1
                    q *= 2
                    quota = nn // q
                    t = 0
                    c = 0
                    a = head
                    while a != -1:
                        bj = b_next[a]
                        if bj == -1:
                            break
                        s_next[b_st[a]] = b_sh[bj]
                        b_st[a] = b_st[bj]
                        b_size[a] += b_size[bj]
                        if b_max[bj] > b_max[a]:
                            b_max[a] = b_max[bj]
                        b_next[a] = b_next[bj]
                        a = b_next[a]
                    m = 2 * q + 1
                    need_k = m + 1 if m <= done + 1 else 1
                    if (
                        ktop + need_k > base_k + half_k
                        or ns + 3 > base_s + half_s
                        or nb + 1 > base_b + half_b
                    ):
                        head, base_k, ktop, base_s, ns, base_b, nb = _compact(
                            head, kbuf, base_k, half_k,
                            s_next, s_beg, s_end, s_rev, base_s, half_s,
                            b_next, b_size, b_max, b_sh, b_st, base_b, half_b,
                        )
                    continue  # retry the insertion under the new phase
                inv += delta
                sh = b_sh[land]
                if s_rev[sh] == 1 and s_end[sh] == ktop:
                    kbuf[ktop] = key
                    ktop += 1
                    s_end[sh] = ktop
                else:
                    s_next[ns] = sh
                    s_beg[ns] = ktop
                    s_end[ns] = ktop + 1
                    s_rev[ns] = 1
                    kbuf[ktop] = key
                    ktop += 1
                    b_sh[land] = ns
                    ns += 1
                b_size[land] += 1
                t += 1
                done += 1
                if b_size[land] == m:
                    # split around the stable median
                    r = q + 1
                    sid = b_sh[land]
                    handled = False
                    new_beg = 0
                    new_end = 0
                    first_max = 0
                    if q == 1:
                        # three keys: the stable max (ties resolve to the
                        # oldest copy) splits off, no sorting needed; the
                        # displacement is the number of kept keys stored
                        # after it
                        if s_next[sid] == -1 and s_rev[sid] == 1:
                            # one reversed segment: cut it in place
                            beg = s_beg[sid]
                            end = s_end[sid]
                            k1 = kbuf[end - 1]  # stored front, newest
                            k2 = kbuf[end - 2]
                            k3 = kbuf[beg]  # stored back, oldest
                            if k3 >= k2 and k3 >= k1:
                                s_beg[sid] = beg + 1
                                new_beg = beg
                                new_end = beg + 1
                                first_max = k1 if k1 >= k2 else k2
                            elif k2 >= k1:
                                inv += 1
                                s_beg[sid] = end - 1
                                s_next[sid] = ns
                                s_next[ns] = -1
                                s_beg[ns] = beg
                                s_end[ns] = beg + 1
                                s_rev[ns] = 1
                                b_st[land] = ns
                                ns += 1
                                new_beg = beg + 1
                                new_end = beg + 2
                                first_max = k1 if k1 >= k3 else k3
                            else:
                                inv += 2
                                s_end[sid] = end - 1
                                new_beg = end - 1
                                new_end = end
                                first_max = k2 if k2 >= k3 else k3
                        else:
                            # fragmented block: rewrite as a fresh reversed
                            # pair plus the split-off max
                            w = 0
                            s2 = sid
                            while s2 != -1:
                                if s_rev[s2] == 1:
                                    i = s_end[s2] - 1
                                    while i >= s_beg[s2]:
                                        sc_keys[w] = kbuf[i]
                                        w += 1
                                        i -= 1
                                else:
                                    i = s_beg[s2]
                                    while i < s_end[s2]:
                                        sc_keys[w] = kbuf[i]
                                        w += 1
                                        i += 1
                                s2 = s_next[s2]
                            k1 = sc_keys[0]
                            k2 = sc_keys[1]
                            k3 = sc_keys[2]
                            fb = ktop
                            if k3 >= k2 and k3 >= k1:
                                kbuf[fb] = k3
                                kbuf[fb + 1] = k2
                                kbuf[fb + 2] = k1
                                first_max = k1 if k1 >= k2 else k2
                            elif k2 >= k1:
                                inv += 1
                                kbuf[fb] = k2
                                kbuf[fb + 1] = k3
                                kbuf[fb + 2] = k1
                                first_max = k1 if k1 >= k3 else k3
                            else:
                                inv += 2
                                kbuf[fb] = k1
                                kbuf[fb + 1] = k3
                                kbuf[fb + 2] = k2
                                first_max = k2 if k2 >= k3 else k3
                            ktop += 3
                            s_next[sid] = -1
                            s_beg[sid] = fb + 1
                            s_end[sid] = fb + 3
                            s_rev[sid] = 1
                            b_st[land] = sid
                            new_beg = fb
                            new_end = fb + 1
                        handled = True
                    elif s_next[sid] == -1:
                        # single-segment block: if the stored order is
                        # monotone the stable median split is a pure cut of
                        # the segment, with no key moves and a closed-form
                        # displacement (0 ascending, q*r strictly descending)
                        beg = s_beg[sid]
                        end = s_end[sid]
                        asc = True
                        desc = True
                        if s_rev[sid] == 1:
                            i = beg
                            while i + 1 < end:
                                if kbuf[i] < kbuf[i + 1]:
                                    asc = False
                                    if not desc:
                                        break
                                else:
                                    desc = False
                                    if not asc:
                                        break
                                i += 1
                        else:
                            i = beg
                            while i + 1 < end:
                                if kbuf[i] > kbuf[i + 1]:
                                    asc = False
                                    if not desc:
                                        break
                                else:
                                    desc = False
                                    if not asc:
                                        break
                                i += 1
                        if asc:
                            # stored prefix r stays, suffix q splits off
                            if s_rev[sid] == 1:
                                s_beg[sid] = end - r
                                new_beg = beg
                                new_end = end - r
                                first_max = kbuf[end - r]
                            else:
                                s_end[sid] = beg + r
                                new_beg = beg + r
                                new_end = end
                                first_max = kbuf[beg + r - 1]
                            handled = True
                        elif desc:
                            # strictly descending: the q largest keys are the
                            # stored prefix and move right past the suffix r
                            inv += q * r
                            if s_rev[sid] == 1:
                                s_end[sid] = beg + r
                                new_beg = beg + r
                                new_end = end
                                first_max = kbuf[beg + r - 1]
                            else:
                                s_beg[sid] = end - r
                                new_beg = beg
                                new_end = end - r
                                first_max = kbuf[end - r]
                            handled = True
                    if handled:
                        s_next[ns] = -1
                        s_beg[ns] = new_beg
                        s_end[ns] = new_end
                        s_rev[ns] = s_rev[sid]
                        b_next[nb] = b_next[land]
                        b_size[nb] = q
                        b_max[nb] = b_max[land]
                        b_sh[nb] = ns
                        b_st[nb] = ns
                        ns += 1
                        b_next[land] = nb
                        nb += 1
                        b_size[land] = r
                        b_max[land] = first_max  # pivot key
                    if not handled:
                        w = 0
                        sid = b_sh[land]
                        while sid != -1:
                            if s_rev[sid] == 1:
                                i = s_end[sid] - 1
                                while i >= s_beg[sid]:
                                    sc_keys[w] = kbuf[i]
                                    w += 1
                                    i -= 1
                            else:
                                i = s_beg[sid]
                                while i < s_end[sid]:
                                    sc_keys[w] = kbuf[i]
                                    w += 1
                                    i += 1
                            sid = s_next[sid]
                        _stable_argsort(sc_keys, m, sc_ord, sc_tmp)
                        for j in range(m):
                            sc_small[j] = 0
                        for j in range(r):
                            sc_small[sc_ord[j]] = 1
                        # layout: second part at [fb, fb+q), first part
                        # written backwards as a reversed segment ending at
                        # the new ktop, so it stays open for front inserts
                        fb = ktop
                        w1 = fb + m - 1
                        w2 = fb
                        bigs = 0
                        for p in range(m):
                            if sc_small[p] == 1:
                                kbuf[w1] = sc_keys[p]
                                w1 -= 1
                            else:
                                bigs += 1
                                inv += r + bigs - (p + 1)  # displacement
                                kbuf[w2] = sc_keys[p]
                                w2 += 1
                        ktop += m
                        seg1 = ns
                        s_next[ns] = -1
                        s_beg[ns] = fb + q
                        s_end[ns] = fb + m
                        s_rev[ns] = 1
                        ns += 1
                        seg2 = ns
                        s_next[ns] = -1
                        s_beg[ns] = fb
                        s_end[ns] = fb + q
                        s_rev[ns] = 0
                        ns += 1
                        b_next[nb] = b_next[land]
                        b_size[nb] = q
                        b_max[nb] = b_max[land]
                        b_sh[nb] = seg2
                        b_st[nb] = seg2
                        b_next[land] = nb
                        nb += 1
                        b_size[land] = r
                        b_max[land] = sc_keys[sc_ord[r - 1]]  # pivot key
                        b_sh[land] = seg1
                        b_st[land] = seg1
                    split_count += 1
                    split_work += m
                break

        ph_q[phase - 1] = q
        ph_t[phase - 1] = t
        ph_c[phase - 1] = c

        if n > 0:
            fin = np.empty(n, np.int64)
            ftmp = np.empty(n, np.int64)
            if use_fenwick:
                ford = np.empty(n, np.int64)
                frank = np.empty(n, np.int64)
                fbit = np.zeros(n + 1, np.int64)
            else:
                ford = np.empty(1, np.int64)
                frank = np.empty(1, np.int64)
                fbit = np.zeros(1, np.int64)
            blk = head
            while blk != -1:
                w = 0
                sid = b_sh[blk]
                while sid != -1:
                    if s_rev[sid] == 1:
                        i = s_end[sid] - 1
                        while i >= s_beg[sid]:
                            fin[w] = kbuf[i]
                            w += 1
                            i -= 1
                    else:
                        i = s_beg[sid]
                        while i < s_end[sid]:
                            fin[w] = kbuf[i]
                            w += 1
                            i += 1
                    sid = s_next[sid]
                if w == 2:
                    if fin[1] < fin[0]:
                        inv += 1
                elif w > 2:
                    if use_fenwick:
                        inv += _fenwick_count_block(fin, w, ford, ftmp, frank, fbit)
                    else:
                        inv += _merge_count_vals(fin, ftmp, w)
                blk = b_next[blk]

        return (
            inv,
            ph_q[:phase].copy(),
            ph_t[:phase].copy(),
            ph_c[:phase].copy(),
            split_count,
            split_work,
        )

    @njit(cache=True)
    def _adjacent_swaps_run(n, k, state):
        seq = np.empty(n, np.int64)
        for i in range(n):
            seq[i] = i
        m = n - 1
        if m <= 0 or k <= 0:
            return seq
        tree = np.zeros(m + 1, np.int64)
        for i in range(1, m + 1):
            tree[i] = i & (-i)
        flags = np.ones(m, np.uint8)
        count = m
        hb = 1
        while hb * 2 <= m:
            hb *= 2
        done = 0
        while done < k and count > 0:
            state ^= state >> _U12
            state ^= state << _U25
            state ^= state >> _U27
            val = state * _XS_MULT
            j = np.int64(val % np.uint64(count))
            rem = j + 1
            pos = 0
            b = hb
            while b:
                nxt = pos + b
                if nxt <= m and tree[nxt] < rem:
                    pos = nxt
                    rem -= tree[nxt]
                b >>= 1
            tmpv = seq[pos]
            seq[pos] = seq[pos + 1]
            seq[pos + 1] = tmpv
            lo = pos - 1 if pos > 0 else 0
            hi = pos + 1 if pos + 1 < m else pos
            for p in range(lo, hi + 1):
                f = 1 if seq[p] < seq[p + 1] else 0
                if f != flags[p]:
                    flags[p] = np.uint8(f)
                    if f == 1:
                        dlt = 1
                        count += 1
                    else:
                        dlt = -1
                        count -= 1
                    i = p + 1
                    while i <= m:
                        tree[i] += dlt
                        i += i & (-i)
            done += 1
        return seq

    def adjacent_swaps_kernel(n: int, k: int, state0: int) -> np.ndarray:
        return _adjacent_swaps_run(n, k, np.uint64(state0))

    def kernel_count(seq, inner_name: str) -> tuple[int, RunStats]:
        arr = np.ascontiguousarray(seq, dtype=np.int64)
        inv, qs, ts, cs, sc, sw = _engine_run(arr, inner_name == "fenwick")
        phases = tuple(
            PhaseRecord(i + 1, int(qs[i]), int(ts[i]), int(cs[i]))
            for i in range(qs.shape[0])
        )
        stats = RunStats(
            phases=phases,
            final_q=int(qs[-1]),
            split_count=int(sc),
            split_work=int(sw),
            inner_total_elements=int(arr.size),
        )
        return int(inv), stats

    def warmup() -> None:
        """Force JIT compilation so timing runs exclude it."""
        kernel_count(np.arange(8, dtype=np.int64), "merge")
        kernel_count(np.arange(8, 0, -1, dtype=np.int64), "fenwick")
        adjacent_swaps_kernel(8, 4, 1)

else:  # pragma: no cover

    def adjacent_swaps_kernel(n: int, k: int, state0: int):
        raise RuntimeError("numba is not available")

    def kernel_count(seq, inner_name: str):
        raise RuntimeError("numba is not available")

    def warmup() -> None:
        pass
