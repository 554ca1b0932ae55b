"""
Bar charts of orbit and class counts per dimension
"""
import logging
from typing import Dict

import numpy as np
import matplotlib
matplotlib.use("Agg")
from matplotlib.figure import Figure

logger = logging.getLogger(__name__)

ORBIT_COLOR = '#007bff'
CLASS_COLOR = '#28a745'


class CountsChart:
    """Orbits by dimension 2k next to classes by dimension k"""

    def __init__(self, n: int, q: int, orbits: Dict[int, int], classes: Dict[int, int]):
        self.n = n
        self.q = q
        self.orbits = dict(sorted(orbits.items()))
        self.classes = dict(sorted(classes.items()))

        self.fig = Figure(figsize=(10, 4), facecolor='white', tight_layout=True)
        self.ax1 = self.fig.add_subplot(121)
        self.ax2 = self.fig.add_subplot(122)
        for ax in (self.ax1, self.ax2):
            ax.grid(True, alpha=0.3)
            ax.set_facecolor('#fafafa')
        self._draw()

    def _bars(self, ax, counts: Dict[int, int], color: str, title: str, xlabel: str):
        keys = np.array(list(counts.keys()))
        values = np.array(list(counts.values()))
        bars = ax.bar(keys.astype(str), values, color=color, alpha=0.8)
        ax.set_title(title, fontweight='bold', pad=15)
        ax.set_xlabel(xlabel)
        ax.set_ylabel('Count')
        if values.size and values.max() > 0 and values.max() / max(values[values > 0].min(), 1) > 1000:
            ax.set_yscale('log')
        for bar, value in zip(bars, values):
            ax.text(bar.get_x() + bar.get_width() / 2., bar.get_height(),
                    str(value), ha='center', va='bottom', fontsize=8)

    def _draw(self):
        self._bars(self.ax1, self.orbits, ORBIT_COLOR,
                   f'Coadjoint orbits of G_{self.n}(F_{self.q})', 'Orbit dimension')
        self._bars(self.ax2, self.classes, CLASS_COLOR,
                   f'Conjugacy classes of G_{self.n}(F_{self.q})', 'Class dimension k')

    def save_chart(self, filename: str) -> bool:
        try:
            self.fig.savefig(filename, dpi=300, bbox_inches='tight')
            return True
        except Exception as e:
            logger.error("Error saving chart to %s: %s", filename, e)
            return False

    def get_chart_summary(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "orbit_total": sum(self.orbits.values()),
            "class_total": sum(self.classes.values()),
            "max_orbit_dimension": max(self.orbits) if self.orbits else 0,
            "max_class_dimension": max((k for k, v in self.classes.items() if v), default=0),
        }
