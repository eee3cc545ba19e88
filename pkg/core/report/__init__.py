from core.report.models import ComparisonRow, GraphSummary, Report, TableReproduction, TableRow
from core.report.render import render
from core.report.tables import load_published_tables, reproduce_table, row_status, select_tables
