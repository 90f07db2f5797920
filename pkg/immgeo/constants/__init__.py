"""
Toolkit Constants
Column layouts and names shared by services and commands
"""
# CSV flattening of a catalog: one row per component
CATALOG_CSV_COLUMNS = ['kind', 'label', 'dim', 'dim_oracle']

# CSV flattening of a report: one row per check
REPORT_CSV_COLUMNS = ['check', 'value']

# Name of the variable of the quotient ring Q[t]/(t^n + q - 1)
QUOTIENT_VARIABLE = 't'
