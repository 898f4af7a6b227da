# Diagnostic Tables Package
