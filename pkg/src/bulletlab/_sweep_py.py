"""Pure-Python sweep kernel for bullet-model diagrams.

The sweep treats x as time.  Horizontal lines are long-lived particles
with a position (their ordinate) and two exponential clocks (next split,
next turn); vertical lines are instantaneous upward excursions resolved
at their birth abscissa, because nothing to the right can influence them.
All pending events live in one priority queue keyed by abscissa, with a
fixed priority order and a unique serial number breaking ties, so the pop
sequence is a total order and the simulation is exactly reproducible.

The compiled kernel in ``_sweep.pyx`` is a line-for-line port of this
module.  Both draw uniforms from the same generator in the same order and
combine them with identically shaped expressions, so they produce
bit-identical diagrams.  Any behavioral change here must be mirrored
there.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from heapq import heappop, heappush

from .errors import RunawayDiagramError

# Endpoint-kind codes, numerically equal to model.PointKind.
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
_PRIO_ENTRY = 0
_PRIO_EX = 1
_PRIO_SPLIT = 2
_PRIO_TURN = 3


def sweep(params, rect, entries_x, entries_y, creations, generator, max_events):
    """Simulate one diagram; return raw segments and crossings.

    ``params`` is the 8-tuple (lambda0, lambdaV, lambdaH, tauV, tauH, pV,
    pH, p0); lambda0 is unused because creation points arrive pre-sampled
    in ``creations``.  ``entries_x`` and ``entries_y`` hold the bottom and
    left edge entry coordinates in increasing order.  Returns three lists:
    verticals as (x, ylo, yhi, loKind, hiKind), horizontals as (y, xlo,
    xhi, loKind, hiKind), crossings as (x, y).
    """
    _, lambdaV, lambdaH, tauV, tauH, pV, pH, p0 = params
    x0, y0, x1, y1 = rect
    random = generator.random

    rate_v = lambdaV + tauV
    split_ratio = lambdaV / rate_v if rate_v > 0.0 else 0.0
    thr_annihilate = pV + pH + p0
    thr_vertical_dies = pV + pH

    def exp_positive(rate):
        # Inverse-CDF exponential; u == 0 is redrawn so gaps are positive.
        while True:
            u = random()
            if u > 0.0:
                return -math.log1p(-u) / rate

    heap = []
    serial = 0
    events = 0

    # One record per horizontal particle ever created, indexed by hid.
    h_y = []
    h_xb = []
    h_lokind = []
    h_alive = []

    # Alive horizontals ordered by ordinate, with parallel hid list.
    alive_ys = []
    alive_hids = []

    verticals_out = []
    horizontals_out = []
    crossings = []

    def spawn_horizontal(xb, y, lokind):
        nonlocal serial
        hid = len(h_y)
        h_y.append(y)
        h_xb.append(xb)
        h_lokind.append(lokind)
        h_alive.append(True)
        pos = bisect_left(alive_ys, y)
        alive_ys.insert(pos, y)
        alive_hids.insert(pos, hid)
        if lambdaH > 0.0:
            xs = xb + exp_positive(lambdaH)
            if xs < x1:
                heappush(heap, (xs, _PRIO_SPLIT, y, serial, hid))
                serial += 1
        if tauH > 0.0:
            xt = xb + exp_positive(tauH)
            if xt < x1:
                heappush(heap, (xt, _PRIO_TURN, y, serial, hid))
                serial += 1

    def kill_horizontal(hid, x_end, hikind):
        h_alive[hid] = False
        y = h_y[hid]
        pos = bisect_left(alive_ys, y)
        while alive_hids[pos] != hid:
            pos += 1
        del alive_ys[pos]
        del alive_hids[pos]
        horizontals_out.append((y, h_xb[hid], x_end, h_lokind[hid], hikind))

    def run_excursion(x, y_start, lokind):
        nonlocal events
        y_cur = y_start
        remaining = exp_positive(rate_v) if rate_v > 0.0 else math.inf
        while True:
            events += 1
            if events > max_events:
                raise RunawayDiagramError(
                    f"event budget {max_events} exhausted during an excursion"
                )
            y_own = y_cur + remaining
            pos = bisect_right(alive_ys, y_cur)
            y_meet = alive_ys[pos] if pos < len(alive_ys) else math.inf
            if y1 <= y_own and y1 <= y_meet:
                verticals_out.append((x, y_start, y1, lokind, _VS))
                return
            if y_own <= y_meet:
                if lambdaV > 0.0 and tauV > 0.0:
                    is_split = random() < split_ratio
                else:
                    is_split = lambdaV > 0.0
                if is_split:
                    spawn_horizontal(x, y_own, _HB)
                    remaining = exp_positive(rate_v)
                    y_cur = y_own
                    continue
                verticals_out.append((x, y_start, y_own, lokind, _HT))
                spawn_horizontal(x, y_own, _HT)
                return
            hid = alive_hids[pos]
            u = random()
            if u < pV:
                kill_horizontal(hid, x, _HA)
                remaining = y_own - y_meet
                y_cur = y_meet
                continue
            if u < thr_vertical_dies:
                verticals_out.append((x, y_start, y_meet, lokind, _VA))
                return
            if u < thr_annihilate:
                verticals_out.append((x, y_start, y_meet, lokind, _OA))
                kill_horizontal(hid, x, _OA)
                return
            crossings.append((x, y_meet))
            remaining = y_own - y_meet
            y_cur = y_meet

    for y in entries_y:
        spawn_horizontal(x0, y, _HE)
    for x in entries_x:
        heappush(heap, (x, _PRIO_ENTRY, y0, serial, -1))
        serial += 1
    for cx, cy in creations:
        heappush(heap, (cx, _PRIO_EX, cy, serial, -1))
        serial += 1

    while heap:
        events += 1
        if events > max_events:
            raise RunawayDiagramError(
                f"event budget {max_events} exhausted in the event loop"
            )
        x, prio, y, _, hid = heappop(heap)
        if prio == _PRIO_ENTRY:
            run_excursion(x, y0, _VE)
        elif prio == _PRIO_EX:
            spawn_horizontal(x, y, _OB)
            run_excursion(x, y, _OB)
        elif prio == _PRIO_SPLIT:
            if not h_alive[hid]:
                continue
            xs = x + exp_positive(lambdaH)
            if xs < x1:
                heappush(heap, (xs, _PRIO_SPLIT, y, serial, hid))
                serial += 1
            run_excursion(x, y, _VB)
        else:
            if not h_alive[hid]:
                continue
            kill_horizontal(hid, x, _VT)
            run_excursion(x, y, _VT)

    for pos in range(len(alive_ys)):
        hid = alive_hids[pos]
        horizontals_out.append((h_y[hid], h_xb[hid], x1, h_lokind[hid], _HS))

    return verticals_out, horizontals_out, crossings
