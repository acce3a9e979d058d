"""Coloured ribbon graph classes of the 2-point function at the two
lowest orders: multiplicities, numeric amplitudes, closed forms, and
the resummation check against the exact coefficients.

Run:  python3 demos/graph_gallery.py
"""

from colour3 import closedforms, ribbon


def main():
    p1, p2 = 1.0, 0.0

    print("order lambda^2:")
    c1 = ribbon.enumerate_2pt(1)
    for c in c1:
        amp = ribbon.amplitude(c.representative, [p1, p2])
        print(f"  s = {c.s}, amplitude({p1},{p2}) = {amp:.12f}")
    total = ribbon.resum(c1, [p1, p2])
    print(f"  resum = {total:.12f}, closed = {closedforms.g2(p1, p2):.12f}")

    print("\norder lambda^4 (this enumeration takes ~half a minute):")
    c2 = ribbon.enumerate_2pt(2)
    for i, c in enumerate(c2):
        amp = ribbon.amplitude(c.representative, [p1, p2])
        g = c.representative
        print(f"  class {i}: s = {c.s}, faces = {len(g.faces())}, "
              f"amplitude = {amp:.12f}")
    total = ribbon.resum(c2, [p1, p2])
    print(f"  sum of multiplicities = {sum(c.s for c in c2)}")
    print(f"  resum = {total:.12f}, closed = {closedforms.g4(p1, p2):.12f}")

    print("\nworked examples (numeric integration vs closed form):")
    for k, labels in [(1, (1.0, 0.5)), (2, (1.0, 0.5)), (3, (1.0, 0.5, 0.25))]:
        g = ribbon.example_graph(k)
        num = ribbon.amplitude(g, labels)
        ref = ribbon.example_closed(k, labels)
        print(f"  example {k} at {labels}: {num:.12f} vs {ref:.12f} "
              f"(diff {abs(num - ref):.1e})")


if __name__ == "__main__":
    main()
