import csv

import numpy as np

ENTRY_HEADER = ['t', 're', 'im', 'abs']


def _g17(x):
    return format(float(x), '.17g')


def entry_rows(times, values):
    values = np.asarray(values, dtype=complex)
    for t, z in zip(times, values):
        yield [_g17(t), _g17(z.real), _g17(z.imag), _g17(abs(z))]


def write_entry_series(stream, times, values):
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(ENTRY_HEADER)
    writer.writerows(entry_rows(times, values))


def export_to_csv(times, values, output_file):
    with open(output_file, 'w', newline='', encoding='utf-8') as csvfile:
        write_entry_series(csvfile, times, values)


def export_pairs_to_csv(results, output_file):
    """Per-pair fidelity maxima, one row per FidelityMax."""
    with open(output_file, 'w', newline='', encoding='utf-8') as csvfile:
        writer = csv.writer(csvfile, lineterminator='\n')
        writer.writerow(['i', 'j', 't_star', 'f_star'])
        for r in results:
            writer.writerow([r.pair[0], r.pair[1], _g17(r.t_star), _g17(r.f_star)])
