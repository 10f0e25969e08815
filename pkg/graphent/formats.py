import csv


def format_float(value):
    """Renders a float with 17 significant digits (exact round trip)."""

    return format(float(value), ".17g")


def format_field(value):

    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def write_csv(handle, header, rows):
    """Writes a header row followed by data rows.

    Floats are written with format_float and lines end in a bare newline,
    so identical inputs produce byte-identical output.

    :param handle: A text stream
    :type handle: io.TextIOBase
    :param header: The column names
    :type header: list of str
    :param rows: The data rows, one sequence per row
    :type rows: iterable
    """

    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_field(value) for value in row])
