"""Decompose 4-dimensional codes along great-circle fibers.

The fibration S^3 -> S^2 collapses each great-circle fiber to a point.
Codes built from regular fiber packings project to small, highly
symmetric images: the 48-point code maps to an octahedron (8 points per
fiber), the 600-cell to an icosahedron (10 per fiber). The script prints
both images and the exact cosines recognized among the image points.
"""

from spherecodes.analysis import hopf_map, recognize_value
from spherecodes.catalog import build_catalog, catalog_entry


def describe(name: str) -> None:
    config = build_catalog(catalog_entry(name))
    image = hopf_map(config)
    print(f"{name}: {config.N} points -> {image.config.N} fiber images")
    print(f"  multiplicities: {sorted(set(image.multiplicities))}")
    pts = image.config.points
    seen: dict[float, float] = {}
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            c = float(pts[i] @ pts[j])
            seen.setdefault(round(c, 9), c)
    for key in sorted(seen):
        print(f"  image cosine {key:+.9f} = {recognize_value(seen[key]).describe()}")
    print()


def main() -> None:
    describe("hopf48_48_4")
    describe("cell600_120_4")


if __name__ == "__main__":
    main()
