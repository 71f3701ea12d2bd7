"""Embedded dataset: COVID-19 infected-case percentages from 40 countries."""

COVID_INFECTION_PERCENTAGES: tuple[float, ...] = (
    1.56, 8.51, 2.17, 0.37, 1.09, 9.84, 4.95, 3.18, 11.37, 2.81,
    6.22, 1.87, 9.05, 2.44, 1.38, 4.17, 3.74, 1.37, 2.33, 7.80,
    2.10, 0.47, 2.54, 4.92, 0.09, 0.18, 1.72, 1.02, 0.62, 2.34,
    0.50, 2.37, 3.65, 0.59, 5.76, 2.14, 0.88, 0.95, 4.17, 2.25,
)
