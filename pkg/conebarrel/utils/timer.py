import time


class Timer(object):
    """Wall-clock timer for suite runs; laps accumulate until ``clear``."""

    def __init__(self):
        self.clear()

    def tic(self):
        self.start_time = time.perf_counter()

    def toc(self, average=False):
        lap = time.perf_counter() - self.start_time
        self.laps.append(lap)
        return self.average_time if average else lap

    def toc_ms(self):
        return int(round(self.toc() * 1000))

    @property
    def total_time(self):
        return sum(self.laps)

    @property
    def average_time(self):
        return self.total_time / len(self.laps) if self.laps else 0.

    def clear(self):
        self.start_time = 0.
        self.laps = []
