# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
# distutils: language = c++
"""Compiled sweep kernel, a line-for-line port of ``_sweep_py``.

The algorithm, the priority order and the RNG consumption order are all
documented in the pure module; this file mirrors it statement for
statement.  Uniforms come straight from the generator's bit generator via
``next_double``, which is exactly what ``Generator.random()`` calls, and
every floating-point expression has the same shape, so the two kernels
emit bit-identical diagrams from the same generator state.  Any change to
one file must be mirrored in the other.
"""

from cpython.pycapsule cimport PyCapsule_GetPointer
from libc.math cimport INFINITY, log1p
from libcpp.vector cimport vector

from numpy.random cimport bitgen_t

from .errors import RunawayDiagramError

# Endpoint-kind codes, numerically equal to model.PointKind.
cdef enum:
    _VE = 0
    _VS = 1
    _HE = 2
    _HS = 3
    _OB = 4
    _OA = 5
    _VB = 6
    _HB = 7
    _VT = 8
    _HT = 9
    _VA = 10
    _HA = 11

# Priority order for events sharing an abscissa: entries resolve first,
# then creations, then splits, then turns.
cdef enum:
    _PRIO_ENTRY = 0
    _PRIO_EX = 1
    _PRIO_SPLIT = 2
    _PRIO_TURN = 3


cdef struct Event:
    double x
    int prio
    double y
    long long serial
    Py_ssize_t hid


cdef struct VOut:
    double x
    double lo
    double hi
    int k0
    int k1


cdef struct HOut:
    double y
    double lo
    double hi
    int k0
    int k1


cdef struct XY:
    double x
    double y


cdef inline bint _event_less(Event a, Event b) noexcept:
    # Same total order as the Python heap tuples (x, prio, y, serial, hid);
    # serials are unique so the comparison never reaches hid.
    if a.x != b.x:
        return a.x < b.x
    if a.prio != b.prio:
        return a.prio < b.prio
    if a.y != b.y:
        return a.y < b.y
    return a.serial < b.serial


cdef class _State:
    cdef bitgen_t *rng
    cdef double lambdaV, lambdaH, tauV, tauH, pV, pH, p0
    cdef double x0, y0, x1, y1
    cdef double rate_v, split_ratio, thr_annihilate, thr_vertical_dies
    cdef long long max_events, events, serial
    cdef vector[Event] heap
    cdef vector[double] h_y
    cdef vector[double] h_xb
    cdef vector[int] h_lokind
    cdef vector[char] h_alive
    cdef vector[double] alive_ys
    cdef vector[Py_ssize_t] alive_hids
    cdef vector[VOut] verticals
    cdef vector[HOut] horizontals
    cdef vector[XY] crossings

    cdef inline double random(self) noexcept:
        return self.rng.next_double(self.rng.state)

    cdef double exp_positive(self, double rate) noexcept:
        # Inverse-CDF exponential; u == 0 is redrawn so gaps are positive.
        cdef double u
        while True:
            u = self.random()
            if u > 0.0:
                return -log1p(-u) / rate

    cdef void heap_push(self, Event ev) noexcept:
        cdef Py_ssize_t i, parent
        cdef Event tmp
        self.heap.push_back(ev)
        i = <Py_ssize_t>self.heap.size() - 1
        while i > 0:
            parent = (i - 1) >> 1
            if _event_less(self.heap[i], self.heap[parent]):
                tmp = self.heap[parent]
                self.heap[parent] = self.heap[i]
                self.heap[i] = tmp
                i = parent
            else:
                break

    cdef Event heap_pop(self) noexcept:
        cdef Event top = self.heap[0]
        cdef Event last = self.heap.back()
        cdef Event tmp
        cdef Py_ssize_t n, i, child
        self.heap.pop_back()
        n = <Py_ssize_t>self.heap.size()
        if n > 0:
            self.heap[0] = last
            i = 0
            while True:
                child = 2 * i + 1
                if child >= n:
                    break
                if child + 1 < n and _event_less(self.heap[child + 1], self.heap[child]):
                    child += 1
                if _event_less(self.heap[child], self.heap[i]):
                    tmp = self.heap[i]
                    self.heap[i] = self.heap[child]
                    self.heap[child] = tmp
                    i = child
                else:
                    break
        return top

    cdef Py_ssize_t bisect_left_alive(self, double y) noexcept:
        cdef Py_ssize_t lo = 0, hi = <Py_ssize_t>self.alive_ys.size(), mid
        while lo < hi:
            mid = (lo + hi) >> 1
            if self.alive_ys[mid] < y:
                lo = mid + 1
            else:
                hi = mid
        return lo

    cdef Py_ssize_t bisect_right_alive(self, double y) noexcept:
        cdef Py_ssize_t lo = 0, hi = <Py_ssize_t>self.alive_ys.size(), mid
        while lo < hi:
            mid = (lo + hi) >> 1
            if y < self.alive_ys[mid]:
                hi = mid
            else:
                lo = mid + 1
        return lo

    cdef void spawn_horizontal(self, double xb, double y, int lokind) noexcept:
        cdef Py_ssize_t hid = <Py_ssize_t>self.h_y.size()
        cdef Py_ssize_t pos
        cdef double xs, xt
        cdef Event ev
        self.h_y.push_back(y)
        self.h_xb.push_back(xb)
        self.h_lokind.push_back(lokind)
        self.h_alive.push_back(1)
        pos = self.bisect_left_alive(y)
        self.alive_ys.insert(self.alive_ys.begin() + pos, y)
        self.alive_hids.insert(self.alive_hids.begin() + pos, hid)
        if self.lambdaH > 0.0:
            xs = xb + self.exp_positive(self.lambdaH)
            if xs < self.x1:
                ev.x = xs
                ev.prio = _PRIO_SPLIT
                ev.y = y
                ev.serial = self.serial
                ev.hid = hid
                self.heap_push(ev)
                self.serial += 1
        if self.tauH > 0.0:
            xt = xb + self.exp_positive(self.tauH)
            if xt < self.x1:
                ev.x = xt
                ev.prio = _PRIO_TURN
                ev.y = y
                ev.serial = self.serial
                ev.hid = hid
                self.heap_push(ev)
                self.serial += 1

    cdef void kill_horizontal(self, Py_ssize_t hid, double x_end, int hikind) noexcept:
        cdef double y = self.h_y[hid]
        cdef Py_ssize_t pos
        cdef HOut rec
        self.h_alive[hid] = 0
        pos = self.bisect_left_alive(y)
        while self.alive_hids[pos] != hid:
            pos += 1
        self.alive_ys.erase(self.alive_ys.begin() + pos)
        self.alive_hids.erase(self.alive_hids.begin() + pos)
        rec.y = y
        rec.lo = self.h_xb[hid]
        rec.hi = x_end
        rec.k0 = self.h_lokind[hid]
        rec.k1 = hikind
        self.horizontals.push_back(rec)

    cdef void run_excursion(self, double x, double y_start, int lokind) except *:
        cdef double y_cur = y_start
        cdef double remaining, y_own, y_meet, u
        cdef Py_ssize_t pos, hid
        cdef bint is_split
        cdef VOut vrec
        cdef XY cross
        if self.rate_v > 0.0:
            remaining = self.exp_positive(self.rate_v)
        else:
            remaining = INFINITY
        while True:
            self.events += 1
            if self.events > self.max_events:
                raise RunawayDiagramError(
                    f"event budget {self.max_events} exhausted during an excursion"
                )
            y_own = y_cur + remaining
            pos = self.bisect_right_alive(y_cur)
            if pos < <Py_ssize_t>self.alive_ys.size():
                y_meet = self.alive_ys[pos]
            else:
                y_meet = INFINITY
            if self.y1 <= y_own and self.y1 <= y_meet:
                vrec.x = x
                vrec.lo = y_start
                vrec.hi = self.y1
                vrec.k0 = lokind
                vrec.k1 = _VS
                self.verticals.push_back(vrec)
                return
            if y_own <= y_meet:
                if self.lambdaV > 0.0 and self.tauV > 0.0:
                    is_split = self.random() < self.split_ratio
                else:
                    is_split = self.lambdaV > 0.0
                if is_split:
                    self.spawn_horizontal(x, y_own, _HB)
                    remaining = self.exp_positive(self.rate_v)
                    y_cur = y_own
                    continue
                vrec.x = x
                vrec.lo = y_start
                vrec.hi = y_own
                vrec.k0 = lokind
                vrec.k1 = _HT
                self.verticals.push_back(vrec)
                self.spawn_horizontal(x, y_own, _HT)
                return
            hid = self.alive_hids[pos]
            u = self.random()
            if u < self.pV:
                self.kill_horizontal(hid, x, _HA)
                remaining = y_own - y_meet
                y_cur = y_meet
                continue
            if u < self.thr_vertical_dies:
                vrec.x = x
                vrec.lo = y_start
                vrec.hi = y_meet
                vrec.k0 = lokind
                vrec.k1 = _VA
                self.verticals.push_back(vrec)
                return
            if u < self.thr_annihilate:
                vrec.x = x
                vrec.lo = y_start
                vrec.hi = y_meet
                vrec.k0 = lokind
                vrec.k1 = _OA
                self.verticals.push_back(vrec)
                self.kill_horizontal(hid, x, _OA)
                return
            cross.x = x
            cross.y = y_meet
            self.crossings.push_back(cross)
            remaining = y_own - y_meet
            y_cur = y_meet


def sweep(params, rect, entries_x, entries_y, creations, generator, max_events):
    """Simulate one diagram; same contract as ``_sweep_py.sweep``."""
    cdef _State st = _State()
    cdef double y, x, cx, cy, xs
    cdef Event ev
    cdef Event cur
    cdef HOut hrec
    cdef Py_ssize_t pos, hid, i

    st.lambdaV = params[1]
    st.lambdaH = params[2]
    st.tauV = params[3]
    st.tauH = params[4]
    st.pV = params[5]
    st.pH = params[6]
    st.p0 = params[7]
    st.x0 = rect[0]
    st.y0 = rect[1]
    st.x1 = rect[2]
    st.y1 = rect[3]
    capsule = generator.bit_generator.capsule
    st.rng = <bitgen_t *> PyCapsule_GetPointer(capsule, "BitGenerator")

    st.rate_v = st.lambdaV + st.tauV
    st.split_ratio = st.lambdaV / st.rate_v if st.rate_v > 0.0 else 0.0
    st.thr_annihilate = st.pV + st.pH + st.p0
    st.thr_vertical_dies = st.pV + st.pH
    st.max_events = max_events
    st.events = 0
    st.serial = 0

    for y in entries_y:
        st.spawn_horizontal(st.x0, y, _HE)
    for x in entries_x:
        ev.x = x
        ev.prio = _PRIO_ENTRY
        ev.y = st.y0
        ev.serial = st.serial
        ev.hid = -1
        st.heap_push(ev)
        st.serial += 1
    for item in creations:
        cx = item[0]
        cy = item[1]
        ev.x = cx
        ev.prio = _PRIO_EX
        ev.y = cy
        ev.serial = st.serial
        ev.hid = -1
        st.heap_push(ev)
        st.serial += 1

    while st.heap.size() > 0:
        st.events += 1
        if st.events > st.max_events:
            raise RunawayDiagramError(
                f"event budget {st.max_events} exhausted in the event loop"
            )
        cur = st.heap_pop()
        if cur.prio == _PRIO_ENTRY:
            st.run_excursion(cur.x, st.y0, _VE)
        elif cur.prio == _PRIO_EX:
            st.spawn_horizontal(cur.x, cur.y, _OB)
            st.run_excursion(cur.x, cur.y, _OB)
        elif cur.prio == _PRIO_SPLIT:
            if not st.h_alive[cur.hid]:
                continue
            xs = cur.x + st.exp_positive(st.lambdaH)
            if xs < st.x1:
                ev.x = xs
                ev.prio = _PRIO_SPLIT
                ev.y = cur.y
                ev.serial = st.serial
                ev.hid = cur.hid
                st.heap_push(ev)
                st.serial += 1
            st.run_excursion(cur.x, cur.y, _VB)
        else:
            if not st.h_alive[cur.hid]:
                continue
            st.kill_horizontal(cur.hid, cur.x, _VT)
            st.run_excursion(cur.x, cur.y, _VT)

    for pos in range(<Py_ssize_t>st.alive_ys.size()):
        hid = st.alive_hids[pos]
        hrec.y = st.h_y[hid]
        hrec.lo = st.h_xb[hid]
        hrec.hi = st.x1
        hrec.k0 = st.h_lokind[hid]
        hrec.k1 = _HS
        st.horizontals.push_back(hrec)

    verticals_out = [
        (
            st.verticals[i].x,
            st.verticals[i].lo,
            st.verticals[i].hi,
            st.verticals[i].k0,
            st.verticals[i].k1,
        )
        for i in range(<Py_ssize_t>st.verticals.size())
    ]
    horizontals_out = [
        (
            st.horizontals[i].y,
            st.horizontals[i].lo,
            st.horizontals[i].hi,
            st.horizontals[i].k0,
            st.horizontals[i].k1,
        )
        for i in range(<Py_ssize_t>st.horizontals.size())
    ]
    crossings_out = [
        (st.crossings[i].x, st.crossings[i].y)
        for i in range(<Py_ssize_t>st.crossings.size())
    ]
    return verticals_out, horizontals_out, crossings_out
