# Ellisflux engine packages
