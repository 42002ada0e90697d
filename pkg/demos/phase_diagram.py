"""A coarse text rendering of the (r, s) phase diagram.

R = entanglement frozen, G/B = sudden death (sign of s), . = separable,
+ = on a region boundary, blank = not a physical state.
"""
from qcorr import analysis
from qcorr.analysis import Region

glyph = {
    Region.RED_INVARIANT: "R", Region.GREEN_SD: "G", Region.BLUE_SD: "B",
    Region.GRAY_SEPARABLE: ".", Region.BOUNDARY: "+",
}
n = 21
pts = analysis.phase_diagram(n)
by_rs = {(pt.r, pt.s): pt for pt in pts}
r_axis, s_axis = analysis.grid_axes(n)

print("s ->  from -1/2 (left) to 1/2 (right); r increases downward")
for r in r_axis:
    row = "".join(glyph[by_rs[r, s].tag.region] if by_rs[r, s].physical else " " for s in s_axis)
    print(f"r={r:.3f} |{row}|")

counts = {}
for pt in pts:
    if pt.physical:
        counts[pt.tag.region.value] = counts.get(pt.tag.region.value, 0) + 1
print(counts)
