import numpy as np
import pytest

from fractaldim import ValidationError, hilbert_curve
from fractaldim.render import plot_cloud, plot_profile, plot_series, svg_points, svg_polyline


def parse_points_attr(svg: str) -> np.ndarray:
    start = svg.index('points="') + len('points="')
    coords = svg[start:svg.index('"', start)]
    return np.array([[float(v) for v in pair.split(",")] for pair in coords.split()])


class TestSvgStructure:
    def test_polyline_document(self):
        svg = svg_polyline(np.array([[0.0, 0.0], [1.0, 1.0]]))
        assert svg.startswith('<svg xmlns="http://www.w3.org/2000/svg"')
        assert 'width="512"' in svg and 'height="512"' in svg
        assert 'viewBox="0 0 1 1"' in svg
        assert svg.count("<polyline") == 1
        assert svg.rstrip().endswith("</svg>")

    def test_points_one_rect_per_point(self):
        pts = np.random.default_rng(7).uniform(size=(40, 2))
        svg = svg_points(pts)
        assert svg.count("<rect") == 40

    def test_marker_size_is_half_pixel(self):
        svg = svg_points(np.array([[0.0, 0.0], [1.0, 1.0]]))
        assert f'width="{0.5 / 512!r}"' in svg

    def test_content_stays_inside_viewbox(self):
        pts = np.random.default_rng(8).normal(size=(200, 2)) * 50.0
        unit = parse_points_attr(svg_polyline(pts))
        assert unit.min() >= 0.0 and unit.max() <= 1.0

    def test_y_axis_flipped(self):
        # higher data y must land at smaller SVG y
        unit = parse_points_attr(svg_polyline(np.array([[0.0, 0.0], [0.0, 1.0]])))
        assert unit[1, 1] < unit[0, 1]
        assert unit[0, 0] == unit[1, 0]

    def test_one_dimensional_input_lifted(self):
        unit = parse_points_attr(svg_polyline(np.array([[0.0], [0.5], [1.0]])))
        assert len(np.unique(unit[:, 1])) == 1

    def test_single_point_does_not_blow_up(self):
        svg = svg_points(np.array([[3.0, 4.0]]))
        assert svg.count("<rect") == 1

    def test_rejects_3d(self):
        with pytest.raises(ValidationError):
            svg_points(np.zeros((4, 3)))

    def test_deterministic_bytes(self):
        pts = hilbert_curve(4).vertices
        assert svg_polyline(pts) == svg_polyline(pts)


class TestMatplotlibFigures:
    def test_plot_cloud_writes_png(self, tmp_path):
        out = tmp_path / "cloud.png"
        plot_cloud(np.random.default_rng(9).uniform(size=(50, 2)), str(out))
        assert out.stat().st_size > 0
        assert out.read_bytes()[:4] == b"\x89PNG"

    def test_plot_cloud_connected(self, tmp_path):
        out = tmp_path / "path.png"
        plot_cloud(hilbert_curve(3).vertices, str(out), connect=True)
        assert out.stat().st_size > 0

    def test_plot_series_writes_png(self, tmp_path):
        out = tmp_path / "series.png"
        plot_series([0.5, 0.25, 0.125], [2, 4, 8], slope=1.0, intercept=0.0, path=str(out))
        assert out.read_bytes()[:4] == b"\x89PNG"

    def test_plot_profile_writes_png(self, tmp_path):
        out = tmp_path / "profile.png"
        deltas = np.linspace(0.1, 1.5, 20)
        plot_profile(deltas, np.exp(-deltas), crossover=0.63, path=str(out))
        assert out.read_bytes()[:4] == b"\x89PNG"

    def test_plot_profile_without_crossover(self, tmp_path):
        out = tmp_path / "nocross.png"
        plot_profile([0.1, 0.2], [5.0, 4.0], crossover=None, path=str(out))
        assert out.stat().st_size > 0
