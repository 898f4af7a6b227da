# Ladder Peeling Package
