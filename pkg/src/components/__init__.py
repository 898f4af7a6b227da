# Output Records Package
